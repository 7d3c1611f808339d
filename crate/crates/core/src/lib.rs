//! Exact-arithmetic workbench for zeta functions of varieties over finite
//! fields. Computes zeta functions from brute-force point counts and
//! mechanically checks symmetry, parity, and sign constraints on the
//! resulting Frobenius eigenvalue data: slope autoduality, evenness of
//! odd-weight degrees, evenness of ±√(q^r) multiplicities, and the
//! determinant identity for pure weight parts.

pub mod expr;
pub mod factor;
pub mod field;
pub mod multiset;
pub mod poly;
pub mod slopes;
pub mod sturm;
pub mod variety;
pub mod weights;
pub mod zeta;

pub use factor::{factor_integer_poly, FactorError, Factorization};
pub use field::{find_irreducible, FieldElement, FieldError, FieldParams};
pub use multiset::Multiset;
pub use poly::{QPoly, ZPoly};
pub use slopes::{
    dieudonne_manin_check, is_autodual, is_autodual_mod2, newton_polygon, reflect,
    NewtonPolygonData, SlopeMultiset,
};
pub use zeta::{
    parse_zeta_literal, reconstruct_rational, series_from_counts, Expansion, PowerSeries,
    ZetaError, ZetaFunction,
};
