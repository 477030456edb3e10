//! Orientals as free algebras of the expansion monad, with exact comparison
//! against the simplex complexes through Steiner tables.
//!
//! ```
//! use orientalis::{cells, oriental};
//!
//! let o2 = oriental::oriental(2);
//! let top = cells::GenKey::simplex([0, 1, 2]).unwrap();
//! assert_eq!(cells::print(o2.tgt(&top).unwrap()), "<1,2>*0<0,1>");
//! ```

pub mod cells;
pub mod cylinders;
pub mod error;
pub mod expansion;
pub mod oriental;
pub mod polygraph;
pub mod report;
pub mod steiner;
pub mod verify;

pub use error::{Error, Result};
