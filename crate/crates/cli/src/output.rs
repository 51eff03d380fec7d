use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use tempfile::NamedTempFile;

/// Destination that only appears once everything has been written: file
/// output goes to a temporary sibling and is renamed on [`Output::finish`].
pub enum Output {
    Stdout(BufWriter<io::Stdout>),
    File { tmp: BufWriter<NamedTempFile>, path: PathBuf },
}

impl Output {
    pub fn open(path: &str) -> Result<Self> {
        if path == "-" {
            return Ok(Output::Stdout(BufWriter::new(io::stdout())));
        }
        let path = PathBuf::from(path);
        let dir = match path.parent() {
            Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
            _ => PathBuf::from("."),
        };
        let tmp = NamedTempFile::new_in(&dir)
            .with_context(|| format!("cannot create a temporary file in {}", dir.display()))?;
        Ok(Output::File { tmp: BufWriter::new(tmp), path })
    }

    /// Opens a file destination, refusing stdout.
    pub fn open_file(path: &str, what: &str) -> Result<Self> {
        anyhow::ensure!(path != "-", "{what} must be written to a file, pass --output PATH");
        Self::open(path)
    }

    pub fn finish(self) -> Result<()> {
        match self {
            Output::Stdout(mut w) => Ok(w.flush()?),
            Output::File { tmp, path } => {
                let tmp = tmp.into_inner().map_err(|e| e.into_error())?;
                persist(tmp, &path)
            }
        }
    }
}

fn persist(tmp: NamedTempFile, path: &Path) -> Result<()> {
    tmp.persist(path).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(())
}

impl Write for Output {
    fn write(&mut self, buf: &[u8]) -> io::Result<usize> {
        match self {
            Output::Stdout(w) => w.write(buf),
            Output::File { tmp, .. } => tmp.write(buf),
        }
    }

    fn flush(&mut self) -> io::Result<()> {
        match self {
            Output::Stdout(w) => w.flush(),
            Output::File { tmp, .. } => tmp.flush(),
        }
    }
}
