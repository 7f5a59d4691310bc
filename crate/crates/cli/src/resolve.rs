use std::path::{Path, PathBuf};

use omlkit::corpus;
use omlkit::format::{load_structure, Structure};
use omlkit::{Error, Result};

const EXTENSIONS: &[&str] = &["oml", "rlse", "events", "txt"];

/// A file path, then a builtin name, then a file under `OMLKIT_CORPUS_DIR`.
pub fn structure(arg: &str) -> Result<Structure> {
    let path = Path::new(arg);
    if path.is_file() {
        return load_structure(path);
    }
    match corpus::builtin(arg) {
        Ok(b) => return Ok(b.into()),
        Err(Error::UnknownName(_)) => {}
        Err(e) => return Err(e),
    }
    if let Some(dir) = std::env::var_os("OMLKIT_CORPUS_DIR") {
        let dir = PathBuf::from(dir);
        let candidates = std::iter::once(dir.join(arg))
            .chain(EXTENSIONS.iter().map(|ext| dir.join(format!("{arg}.{ext}"))));
        for p in candidates {
            if p.is_file() {
                return load_structure(&p);
            }
        }
    }
    Err(Error::UnknownName(arg.to_owned()))
}
