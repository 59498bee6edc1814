//! Complete mappings and k-complete automorphisms of small finite groups.

pub mod aut;
pub mod catalog;
pub mod completeness;
pub mod expr;
pub mod field;
pub mod group;
pub mod mapping;
pub mod report;
pub mod structure;
pub mod witness;
