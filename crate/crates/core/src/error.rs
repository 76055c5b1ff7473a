use std::path::PathBuf;

use thiserror::Error;

use crate::coloring::ColoringError;
use crate::cpt::CptError;
use crate::enumerate::EnumError;
use crate::generators::GenError;
use crate::line_graph::LineGraphError;
use crate::local::LocalError;
use crate::miura::MiuraError;
use crate::model::StarError;

/// Any failure surfaced by the command-line front end.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Cpt { path: PathBuf, source: CptError },
    #[error(transparent)]
    Generate(#[from] GenError),
    #[error(transparent)]
    Star(#[from] StarError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    LineGraph(#[from] LineGraphError),
    #[error(transparent)]
    Enumerate(#[from] EnumError),
    #[error(transparent)]
    Miura(#[from] MiuraError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

impl Error {
    /// 2 for unreadable or malformed input, 1 for everything the domain
    /// rejects.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io { .. } | Error::Usage(_) | Error::Cpt { .. } | Error::Miura(MiuraError::Parse { .. }) => 2,
            _ => 1,
        }
    }
}
