// SPDX-License-Identifier: Apache-2.0

//! File formats, JSON reports and the command-line front end for
//! `twistlab-core`.

pub mod cli;
pub mod formats;
pub mod report;

use std::fmt;

/// Bad user input: a malformed file, an unknown name or a violated
/// precondition. The CLI maps it to exit code 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

impl From<twistlab_core::Error> for InputError {
    fn from(e: twistlab_core::Error) -> Self {
        InputError(e.to_string())
    }
}
