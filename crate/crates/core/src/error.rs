// Copyright 2026 The qbaker Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps [`Error::Argument`] to exit code 2 and [`Error::Capacity`]
/// to exit code 3.
#[derive(Debug, Error)]
pub enum Error {
    /// An input violated a documented precondition.
    #[error("invalid argument: {0}")]
    Argument(String),
    /// The request exceeds a size or memory limit.
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! arg_err {
    ($($t:tt)*) => {
        $crate::error::Error::Argument(format!($($t)*))
    };
}
pub(crate) use arg_err;

macro_rules! ensure_arg {
    ($cond:expr, $($t:tt)*) => {
        if !$cond {
            return Err($crate::error::arg_err!($($t)*));
        }
    };
}
pub(crate) use ensure_arg;
