//! Parameter overrides from a TOML file, merged under command-line flags.

use std::path::Path;

use serde::Deserialize;

use coxeter_growth::analysis::DEFAULT_TOL;
use coxeter_growth::oracle::DEFAULT_WORD_CAP;
use coxeter_growth::sweep::{DEFAULT_L_LIST, DEFAULT_RHO};

use crate::error::CliError;

/// Largest number of series terms `growth` will expand.
pub const MAX_TERMS: usize = 10_000;
/// Largest deformation or family parameter accepted.
pub const MAX_PARAM: u32 = 1_000_000;

#[derive(Debug, Default, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub l_list: Option<Vec<u32>>,
    pub rho: Option<f64>,
    pub r_max: Option<usize>,
    pub m_max: Option<usize>,
    pub tol: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
        toml::from_str(&text).map_err(|e| CliError::Config {
            path: path.to_path_buf(),
            message: e.message().to_string(),
        })
    }
}

/// Effective parameters after merging flags over the file over defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    pub l_list: Vec<u32>,
    pub rho: f64,
    pub r_max: usize,
    pub m_max: usize,
    pub tol: f64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            l_list: DEFAULT_L_LIST.to_vec(),
            rho: DEFAULT_RHO,
            r_max: 8,
            m_max: 8,
            tol: DEFAULT_TOL,
        }
    }
}

impl Params {
    pub fn merge(file: &FileConfig) -> Self {
        let d = Params::default();
        Params {
            l_list: file.l_list.clone().unwrap_or(d.l_list),
            rho: file.rho.unwrap_or(d.rho),
            r_max: file.r_max.unwrap_or(d.r_max),
            m_max: file.m_max.unwrap_or(d.m_max),
            tol: file.tol.unwrap_or(d.tol),
        }
    }

    pub fn check_l_list(&self) -> Result<(), CliError> {
        if self.l_list.is_empty() {
            return Err(CliError::Usage("l_list must not be empty".into()));
        }
        if let Some(l) = self.l_list.iter().find(|&&l| l > MAX_PARAM) {
            return Err(CliError::Cap(format!("parameter {l}")));
        }
        Ok(())
    }

    pub fn check_radius(&self) -> Result<(), CliError> {
        if self.r_max > DEFAULT_WORD_CAP {
            return Err(CliError::Cap(format!(
                "radius {} (cap {DEFAULT_WORD_CAP})",
                self.r_max
            )));
        }
        Ok(())
    }

    pub fn check_terms(&self, oracle: bool) -> Result<(), CliError> {
        let cap = if oracle { DEFAULT_WORD_CAP } else { MAX_TERMS };
        if self.m_max > cap {
            return Err(CliError::Cap(format!("m_max {} (cap {cap})", self.m_max)));
        }
        Ok(())
    }
}
