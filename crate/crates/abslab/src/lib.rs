//! `abslab` computes the atom-bond sum-connectivity (ABS) index of trees and
//! settles extremal questions about it by exhaustive search: which trees
//! minimize the index among all trees with a given number of pendent
//! vertices, or with a given order and pendent count. Searches produce
//! machine-readable certificates with structural audits, and a verification
//! suite confirms every scalar inequality the closed-form bounds rest on.

// Trees, canonical codes, and structural decompositions.
pub mod tree;

// Degree-based edge-weight indices (ABS, ABC, SC, Randic).
pub mod indices;

// Orderly generation of non-isomorphic free trees.
pub mod enumeration;
