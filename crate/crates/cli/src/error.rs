use std::path::PathBuf;

use thiserror::Error;

use coxeter_growth::analysis::AnalysisError;
use coxeter_growth::catalog::CatalogError;
use coxeter_growth::gram::ClassifyError;
use coxeter_growth::matrix::MatrixError;
use coxeter_growth::oracle::OracleError;
use coxeter_growth::steinberg::SteinbergError;
use coxeter_growth::sweep::SweepError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Input,
    Cap,
    Internal,
}

impl Kind {
    pub fn exit_code(self) -> u8 {
        match self {
            Kind::Input => 2,
            Kind::Cap => 3,
            Kind::Internal => 4,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("config {path}: {message}")]
    Config { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0} exceeds its cap")]
    Cap(String),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Steinberg(#[from] SteinbergError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
}

fn catalog_kind(e: &CatalogError) -> Kind {
    match e {
        CatalogError::RankTooLarge(_) => Kind::Cap,
        _ => Kind::Input,
    }
}

fn steinberg_kind(e: &SteinbergError) -> Kind {
    match e {
        SteinbergError::Catalog(c) => catalog_kind(c),
        SteinbergError::Elliptic
        | SteinbergError::OutsideDisk(_)
        | SteinbergError::BracketWidth => Kind::Input,
        SteinbergError::Classify(_)
        | SteinbergError::Poly(_)
        | SteinbergError::NoRootInUnitInterval
        | SteinbergError::AffineRootMismatch(_) => Kind::Internal,
    }
}

fn oracle_kind(e: &OracleError) -> Kind {
    match e {
        OracleError::WordTooLong { .. }
        | OracleError::RadiusTooLarge { .. }
        | OracleError::BudgetExceeded { .. }
        | OracleError::RankTooLarge(_) => Kind::Cap,
        OracleError::LetterOutOfRange { .. }
        | OracleError::RankMismatch { .. }
        | OracleError::Parse(_) => Kind::Input,
    }
}

impl CliError {
    pub fn kind(&self) -> Kind {
        match self {
            CliError::Read { .. }
            | CliError::Write { .. }
            | CliError::Config { .. }
            | CliError::Usage(_)
            | CliError::Matrix(_) => Kind::Input,
            CliError::Cap(_) => Kind::Cap,
            CliError::Catalog(e) => catalog_kind(e),
            CliError::Classify(_) => Kind::Internal,
            CliError::Steinberg(e) => steinberg_kind(e),
            CliError::Sweep(e) => match e {
                SweepError::Steinberg(s) => steinberg_kind(s),
                _ => Kind::Input,
            },
            CliError::Oracle(e) => oracle_kind(e),
            CliError::Analysis(e) => match e {
                AnalysisError::Steinberg(s) => steinberg_kind(s),
                AnalysisError::NotNonAffine(_)
                | AnalysisError::EmptyFamily
                | AnalysisError::Tolerance(_) => Kind::Input,
                AnalysisError::Constant
                | AnalysisError::NoConvergence { .. }
                | AnalysisError::Residual { .. }
                | AnalysisError::Classify(_) => Kind::Internal,
            },
        }
    }
}
