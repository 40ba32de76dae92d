//! Finite-set semantics for natural numbers and list objects, together
//! with a bounded checker for the polynomial presentation of the list
//! functor and a small internal language for writing arrows.

pub mod arith;
pub mod cli;
pub mod error;
pub mod lang;
pub mod listobj;
pub mod polyadj;
pub mod report;
pub mod setmodel;

pub use error::{Error, Result};
pub use setmodel::{Arrow, Budget, Elem, ObjExpr};
