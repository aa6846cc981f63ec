//! Fixed inputs shared by the benchmarks.

use dioph_core::experiments::{diagonal_lines, four_general_lines, InequalityConfig};
use dioph_core::graded_ring::Subscheme;
use dioph_core::monomial_order::WeightVector;
use dioph_core::rational::q;

/// A point of P² away from the coordinate lines.
pub fn plane_point() -> Subscheme {
    Subscheme::point("p", &[1, 2, 3]).unwrap()
}

/// `(x0), (x1^2), (x2, x3)` in P³ with weights `(1, 1/2, 1/3)`.
pub fn coordinate_family() -> (Vec<Subscheme>, WeightVector) {
    let ys = vec![
        Subscheme::coordinate("Y1", 4, &[(0, 1)]).unwrap(),
        Subscheme::coordinate("Y2", 4, &[(1, 2)]).unwrap(),
        Subscheme::coordinate("Y3", 4, &[(2, 1), (3, 1)]).unwrap(),
    ];
    let t = WeightVector::new(vec![q(1, 1), q(1, 2), q(1, 3)]).unwrap();
    (ys, t)
}

/// Four lines in general position, weights 1/3, places {∞, 2, 3, 5}.
pub fn four_lines_config() -> InequalityConfig {
    let lines = four_general_lines();
    let diagonals = diagonal_lines(&lines).unwrap();
    InequalityConfig::new(
        lines,
        vec![q(1, 3); 4],
        "inf,2,3,5".parse().unwrap(),
        q(1, 2),
    )
    .unwrap()
    .with_exceptional(diagonals)
}
