//! Shared oracles for the integration suites. Everything in here is
//! deliberately independent of the library's computation paths: the
//! point is to check Bott's formula, the skyscraper Ext algebra, and the
//! K-class bookkeeping against first-principles constructions.
#![allow(dead_code)]

pub mod cech;
pub mod kclass;
pub mod linalg;
