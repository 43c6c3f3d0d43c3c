//! Test-only support shared by the property suites: a high-precision
//! complex-summation oracle for the point contributions, and generators of
//! random valid baskets. Dev-dependency only; never part of the shipped API.

pub mod gen;
pub mod hifloat;
pub mod oracle;
