//! Column-oriented evaluation of many wedge probabilities at once.

use std::io::{self, Write};
use std::time::Instant;

use crate::error::{Result, WedgeError};
use crate::exec::{for_each_chunk_mut, Workers};
use crate::params::WedgeParams;
use crate::threshold::check_terms;
use crate::wedge::{wedge_prob, Formula, WedgeResult};

/// Rows handed to a worker at a time.
pub const CHUNK_ROWS: usize = 4096;

/// Four equal-length columns of finite boundary parameters.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParamTable {
    a1: Vec<f64>,
    b1: Vec<f64>,
    a2: Vec<f64>,
    b2: Vec<f64>,
}

impl ParamTable {
    pub fn new(a1: Vec<f64>, b1: Vec<f64>, a2: Vec<f64>, b2: Vec<f64>) -> Result<Self> {
        let n = a1.len();
        if b1.len() != n || a2.len() != n || b2.len() != n {
            return Err(WedgeError::ColumnLength { a1: n, b1: b1.len(), a2: a2.len(), b2: b2.len() });
        }
        for (column, values) in [("a1", &a1), ("b1", &b1), ("a2", &a2), ("b2", &b2)] {
            if let Some(row) = values.iter().position(|v| !v.is_finite()) {
                return Err(WedgeError::BadRow { row, column, value: values[row] });
            }
        }
        Ok(Self { a1, b1, a2, b2 })
    }

    pub fn from_params(params: &[WedgeParams]) -> Self {
        let mut table = Self::with_capacity(params.len()).expect("rows already in memory");
        for p in params {
            table.push(p);
        }
        table
    }

    fn with_capacity(rows: usize) -> Result<Self> {
        let column = || {
            let mut v = Vec::new();
            v.try_reserve_exact(rows).map_err(|_| WedgeError::OutOfMemory { rows })?;
            Ok::<_, WedgeError>(v)
        };
        Ok(Self { a1: column()?, b1: column()?, a2: column()?, b2: column()? })
    }

    fn push(&mut self, p: &WedgeParams) {
        self.a1.push(p.a1());
        self.b1.push(p.b1());
        self.a2.push(p.a2());
        self.b2.push(p.b2());
    }

    /// `rows` independent parameter sets drawn as in the convergence study:
    /// each coordinate on `[0, 10]` with distribution function `(x/10)^{1/2}`.
    pub fn sample(rows: usize, seed: u64) -> Result<Self> {
        let mut table = Self::with_capacity(rows)?;
        let mut sampler = crate::bench::ParamSampler::new(seed);
        for _ in 0..rows {
            table.push(&sampler.next_params());
        }
        Ok(table)
    }

    pub fn len(&self) -> usize {
        self.a1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a1.is_empty()
    }

    pub fn row(&self, i: usize) -> WedgeParams {
        WedgeParams::new(self.a1[i], self.b1[i], self.a2[i], self.b2[i]).expect("validated on construction")
    }

    pub fn columns(&self) -> [&[f64]; 4] {
        [&self.a1, &self.b1, &self.a2, &self.b2]
    }
}

/// Per-row results aligned with the input table.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ResultTable {
    pub value: Vec<f64>,
    pub formula: Vec<Formula>,
    pub terms: Vec<u32>,
    pub remainder_bound: Vec<f64>,
}

impl ResultTable {
    pub fn len(&self) -> usize {
        self.value.len()
    }

    pub fn is_empty(&self) -> bool {
        self.value.is_empty()
    }

    pub fn row(&self, i: usize) -> WedgeResult {
        WedgeResult {
            value: self.value[i],
            formula: self.formula[i],
            terms: self.terms[i],
            remainder_bound: self.remainder_bound[i],
        }
    }

    fn from_rows(rows: &[WedgeResult]) -> Self {
        Self {
            value: rows.iter().map(|r| r.value).collect(),
            formula: rows.iter().map(|r| r.formula).collect(),
            terms: rows.iter().map(|r| r.terms).collect(),
            remainder_bound: rows.iter().map(|r| r.remainder_bound).collect(),
        }
    }
}

/// Evaluates [`wedge_prob`] on every row.
///
/// Rows are split into chunks of [`CHUNK_ROWS`]; the output is bit-identical
/// to a sequential loop for any worker count.
pub fn batch_wedge(table: &ParamTable, n_terms: usize, workers: Workers) -> Result<ResultTable> {
    check_terms(n_terms)?;
    let n = table.len();
    let mut rows = Vec::new();
    rows.try_reserve_exact(n).map_err(|_| WedgeError::OutOfMemory { rows: n })?;
    rows.resize(n, WedgeResult::default());
    for_each_chunk_mut(&mut rows, CHUNK_ROWS, workers, |chunk, out| {
        let start = chunk * CHUNK_ROWS;
        for (j, slot) in out.iter_mut().enumerate() {
            *slot = wedge_prob(&table.row(start + j), n_terms).expect("term count checked");
        }
    })?;
    Ok(ResultTable::from_rows(&rows))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimingRow {
    pub n: usize,
    pub workers: usize,
    pub seconds: f64,
}

/// Times [`batch_wedge`] on a freshly sampled table for every
/// `(size, workers)` pair. Table generation is not timed.
pub fn timing_harness(sizes: &[usize], workers_list: &[usize], n_terms: usize, seed: u64) -> Result<Vec<TimingRow>> {
    if let Some(&bad) = sizes.iter().find(|&&n| n == 0) {
        return Err(WedgeError::InvalidArgument(format!("table size must be at least 1, got {bad}")));
    }
    let workers: Vec<Workers> = workers_list.iter().map(|&w| Workers::fixed(w)).collect::<Result<_>>()?;
    let mut report = Vec::with_capacity(sizes.len() * workers.len());
    for &n in sizes {
        let table = ParamTable::sample(n, seed)?;
        for (&w, &count) in workers.iter().zip(workers_list) {
            let start = Instant::now();
            let out = batch_wedge(&table, n_terms, w)?;
            let seconds = start.elapsed().as_secs_f64();
            std::hint::black_box(&out);
            report.push(TimingRow { n, workers: count, seconds });
        }
    }
    Ok(report)
}

/// CSV with header `n,workers,seconds`.
pub fn write_timing_csv<W: Write>(rows: &[TimingRow], mut out: W) -> io::Result<()> {
    writeln!(out, "n,workers,seconds")?;
    for r in rows {
        writeln!(out, "{},{},{:.6}", r.n, r.workers, r.seconds)?;
    }
    out.flush()
}
