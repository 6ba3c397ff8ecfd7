#![cfg_attr(not(test), no_std)]
extern crate alloc;

pub mod arith;
pub mod catalog;
pub mod der;
pub mod error;
pub mod lie;
pub mod locder;
pub mod rng;

pub use error::{Error, Result};
