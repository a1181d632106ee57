//! Finite-group toolkit for square commutative groups, i.e. groups with
//! `(xy)² = (yx)²` for every pair of elements.
//!
//! The crate is `no_std` and needs only `alloc`. Groups are dense Cayley
//! tables ([`group`]); finitely presented groups are realized by coset
//! enumeration ([`presentation`]); [`sqcomm`] holds the square
//! commutativity checks and [`catalog`] the group families they run on.
//! [`verify`] ties everything together into exhaustive suites.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod group;
pub mod presentation;
pub mod sqcomm;
pub mod verify;

pub use group::{are_isomorphic, CayleyGroup, ElementId, GroupError, Isomorphism, QuotientMap, SubgroupSet};
pub use presentation::{todd_coxeter, Presentation, Realization, Word};
