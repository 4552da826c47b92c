//! Fixed-header CSV with round-trippable doubles, written atomically.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use crate::failure::Failure;

pub struct Table {
    columns: usize,
    text: String,
}

/// 17 significant digits, enough to reproduce the double exactly.
pub fn number(v: f64) -> String {
    format!("{v:.16e}")
}

impl Table {
    pub fn new<S: AsRef<str>>(header: &[S]) -> Self {
        let names: Vec<&str> = header.iter().map(AsRef::as_ref).collect();
        Self {
            columns: names.len(),
            text: names.join(",") + "\n",
        }
    }

    /// A row of numbers; `None` leaves the cell empty.
    pub fn row(&mut self, cells: &[Option<f64>]) {
        let cells: Vec<String> = cells.iter().map(|c| c.map(number).unwrap_or_default()).collect();
        self.raw(&cells);
    }

    pub fn raw<S: AsRef<str>>(&mut self, cells: &[S]) {
        assert_eq!(cells.len(), self.columns, "row width must match the header");
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                self.text.push(',');
            }
            let _ = write!(self.text, "{}", cell.as_ref());
        }
        self.text.push('\n');
    }

    pub fn save(&self, path: &Path) -> Result<(), Failure> {
        write_atomic(path, self.text.as_bytes())
    }

    /// Saves to `path`, or prints to standard output when there is none.
    pub fn emit(&self, path: Option<&Path>) -> Result<(), Failure> {
        match path {
            Some(p) => self.save(p),
            None => {
                std::io::stdout().write_all(self.text.as_bytes())?;
                Ok(())
            }
        }
    }
}

/// Writes through a temporary file in the target directory and renames it
/// into place, so readers never see a partial file.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), Failure> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let io = |e: std::io::Error| Failure::Io(format!("{}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
    tmp.write_all(bytes).map_err(io)?;
    tmp.persist(path).map_err(|e| io(e.error))?;
    Ok(())
}
