//! Exact special values of ζ(2n), λ(2n) and β(2l−1) as rational multiples of
//! powers of π, plus the numerical machinery used to cross-check them.

pub mod analysis;
pub mod cli;
pub mod decimal;
pub mod exact;
pub mod oracle;
pub mod special;
pub mod tables;
