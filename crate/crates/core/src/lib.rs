//! Construction and verification machinery for flag-transitive,
//! point-primitive 2-(v,k,λ) designs whose automorphism groups have
//! alternating socle Aₙ, 5 ≤ n ≤ 10.
//!
//! The crate is organized bottom-up:
//!
//! - [`perm`]: permutation arithmetic and the two text formats,
//! - [`group`]: stabilizer chains, orbits, coset actions, primitivity,
//! - [`params`]: parameter feasibility arithmetic and enumeration,
//! - [`designs`]: block designs, development, flag-transitivity, isomorphism,
//! - [`catalog`]: the versioned JSON catalog of groups, maximal subgroups,
//!   block-stabilizer candidates and design records,
//! - [`classify`]: the end-to-end elimination and verification pipeline.

pub mod catalog;
pub mod classify;
pub mod designs;
pub mod group;
pub mod params;
pub mod perm;
