use std::fs::File;
use std::io::{self, Read};

use anyhow::{bail, Context, Result};

pub fn open(path: &str) -> Result<Box<dyn Read>> {
    if path == "-" {
        Ok(Box::new(io::stdin().lock()))
    } else {
        Ok(Box::new(File::open(path).with_context(|| format!("cannot open {path}"))?))
    }
}

/// Reads a headed CSV whose columns must be exactly `columns`, returning
/// the rows as finite floats. Errors name the offending line.
pub fn read_columns<R: Read>(reader: R, columns: &[&str]) -> Result<Vec<Vec<f64>>> {
    let mut csv = csv::ReaderBuilder::new().has_headers(true).trim(csv::Trim::All).from_reader(reader);
    let header: Vec<String> = csv.headers().context("line 1: cannot read header")?.iter().map(str::to_owned).collect();
    if header != columns {
        bail!("line 1: expected header `{}`, found `{}`", columns.join(","), header.join(","));
    }
    let mut rows = Vec::new();
    for record in csv.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            anyhow::anyhow!("line {line}: {e}")
        })?;
        let line = record.position().map_or(0, |p| p.line());
        let mut row = Vec::with_capacity(columns.len());
        for (field, name) in record.iter().zip(columns) {
            let value: f64 =
                field.parse().map_err(|_| anyhow::anyhow!("line {line}: column {name}: `{field}` is not a number"))?;
            if !value.is_finite() {
                bail!("line {line}: column {name}: `{field}` is not finite");
            }
            row.push(value);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Shortest decimal that reads back to the same double.
pub fn fmt_exact(x: f64) -> String {
    format!("{x:?}")
}

/// 17 significant digits.
pub fn fmt_prob(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_crlf_and_trims() {
        let rows =
            read_columns("a1,b1,a2,b2\r\n1, 2,3,4\r\n0.5,0.5,0.5,0.5\n".as_bytes(), &["a1", "b1", "a2", "b2"]).unwrap();
        assert_eq!(rows, vec![vec![1.0, 2.0, 3.0, 4.0], vec![0.5; 4]]);
    }

    #[test]
    fn names_bad_line() {
        let err = read_columns("a1,b1,a2,b2\n1,1,1,1\n1,x,1,1\n".as_bytes(), &["a1", "b1", "a2", "b2"]).unwrap_err();
        assert!(err.to_string().starts_with("line 3: column b1"), "{err}");
        let err = read_columns("a1,b1,a2,b2\n1,1,1\n".as_bytes(), &["a1", "b1", "a2", "b2"]).unwrap_err();
        assert!(err.to_string().starts_with("line 2"), "{err}");
        let err = read_columns("a1,b1,a2,b2\n1,NaN,1,1\n".as_bytes(), &["a1", "b1", "a2", "b2"]).unwrap_err();
        assert!(err.to_string().contains("not finite"), "{err}");
    }

    #[test]
    fn rejects_wrong_header() {
        assert!(read_columns("a,b,c,d\n".as_bytes(), &["a1", "b1", "a2", "b2"]).is_err());
    }

    #[test]
    fn header_only_is_empty() {
        assert!(read_columns("a1,b1,a2,b2\n".as_bytes(), &["a1", "b1", "a2", "b2"]).unwrap().is_empty());
    }

    #[test]
    fn formatting() {
        assert_eq!(fmt_prob(0.5), "5.0000000000000000e-1");
        assert_eq!(fmt_exact(1e-300), "1e-300");
        assert_eq!(fmt_exact(0.1).parse::<f64>().unwrap(), 0.1);
    }
}
