//! Spectral toolkit for signed graphs.
//!
//! A signed graph is a simple graph whose edges carry a sign in `{+1, -1}`.
//! This crate provides the data model (switching, balance, switching-class
//! certificates), exact and numeric spectral computations (big-integer
//! characteristic polynomials, Sturm root counting, a Jacobi eigensolver),
//! the classical polynomial identities (basic-figure coefficients, deletion
//! expansions, matching polynomials and signing averages), named families
//! with a validated catalog, and an exhaustive search engine over signature
//! space (minimization, censuses, cospectral mates, Seidel scans).
//!
//! Numeric kernels are generic over the scalar: the same polynomial and
//! matrix types run over `BigInt` and `BigRational` where results must be
//! exact, and over `f64` where a certified tolerance is enough. The aliases
//! below fix the concrete types used throughout.

pub mod cert;
pub mod constructions;
pub mod eigen;
mod error;
pub mod graph;
pub mod graph6;
pub mod matrix;
pub mod poly;
pub mod polyalg;
pub mod search;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{DeleteTarget, Edge, Sign, SignedGraph, VertexSet, MAX_VERTICES};

/// Exact integer scalar.
pub type Int = num_bigint::BigInt;
/// Exact rational scalar.
pub type Rat = num_rational::BigRational;
/// Monic integer characteristic polynomial, ascending coefficients.
pub type CharPolyInt = poly::Poly<Int>;
/// Rational-coefficient polynomial (signing averages, Sturm endpoints).
pub type RatPoly = poly::Poly<Rat>;
/// Exact integer matrix.
pub type IntMatrix = matrix::SymMatrix<Int>;
/// Exact rational matrix.
pub type RatMatrix = matrix::SymMatrix<Rat>;
/// Floating matrix for the eigensolver.
pub type FloatMatrix = matrix::SymMatrix<f64>;
/// Double-precision spectrum with certified backward error.
pub type Spectrum = eigen::SpectrumReal<f64>;

/// Data bundled with the crate: small-order graph catalogs in graph6 form
/// and the reference signed-graph catalog.
pub mod data {
    /// The validated signed-graph catalog (text format, see
    /// [`crate::constructions::catalog_parse`]).
    pub const CATALOG: &str = include_str!("../data/catalog.sgc");

    /// The Petersen graph in graph6 form.
    pub const PETERSEN_G6: &str = include_str!("../data/petersen.g6");

    const GRAPHS_1: &str = include_str!("../data/graph1.g6");
    const GRAPHS_2: &str = include_str!("../data/graph2.g6");
    const GRAPHS_3: &str = include_str!("../data/graph3.g6");
    const GRAPHS_4: &str = include_str!("../data/graph4.g6");
    const GRAPHS_5: &str = include_str!("../data/graph5.g6");
    const GRAPHS_6: &str = include_str!("../data/graph6.g6");
    const GRAPHS_7: &str = include_str!("../data/graph7.g6");

    /// graph6 text of every graph of the given order, up to isomorphism
    /// (orders 1 through 7).
    pub fn graphs_of_order(n: usize) -> Option<&'static str> {
        match n {
            1 => Some(GRAPHS_1),
            2 => Some(GRAPHS_2),
            3 => Some(GRAPHS_3),
            4 => Some(GRAPHS_4),
            5 => Some(GRAPHS_5),
            6 => Some(GRAPHS_6),
            7 => Some(GRAPHS_7),
            _ => None,
        }
    }

    /// Decoded graphs of the given order.
    pub fn decoded_graphs_of_order(n: usize) -> Option<Vec<crate::SignedGraph>> {
        graphs_of_order(n).map(|text| {
            crate::graph6::parse_str(text, false)
                .expect("bundled graph6 data is valid")
                .graphs
        })
    }
}
