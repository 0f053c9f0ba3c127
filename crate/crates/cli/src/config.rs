//! Optional JSON config file. Precedence everywhere is flag, then file,
//! then built-in default.

use std::path::Path;

use serde::Deserialize;

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    /// Default coefficient ring for `eval` (`gf2`, `rational`, `float64`).
    pub ring: Option<String>,
    /// Default generator count for `eval` and `binor`.
    pub gens: Option<u32>,
    /// Default generator signature, e.g. `"+++-"` (overrides `gens`).
    pub signature: Option<String>,
    /// Chronon for `dirac`.
    pub tau: Option<f64>,
    /// Action constant for `dirac`.
    pub hbar: Option<f64>,
    /// Octad count for `dirac`.
    pub octads: Option<usize>,
    /// Signature of one octad (8 characters of `+`/`-`) for `dirac`.
    pub octad_signature: Option<String>,
    /// Hierarchy form variant (`I`, `T`, `C`, `H`).
    pub form: Option<String>,
    /// Hierarchy square rule (`q`, `minus-q`).
    pub square_rule: Option<String>,
    /// Hierarchy notation order (`plus-first`, `minus-first`).
    pub order: Option<String>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<FileConfig, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text)
            .map_err(|e| format!("cannot parse config {}: {e}", path.display()))
    }
}

/// Flag, then file, then default.
pub fn resolve<T: Clone>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}
