#![allow(dead_code)]

pub mod dot;
pub mod oracle;
pub mod random;

use std::fs;
use std::path::Path;

/// Writes `(file name, contents)` pairs into `dir`.
pub fn write_files(dir: &Path, files: &[(&str, &str)]) {
    for (name, text) in files {
        fs::write(dir.join(name), text).unwrap();
    }
}
