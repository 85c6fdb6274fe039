//! Mantel and Reiman edge bounds and the counting inequality that caps the
//! order of a unique-triangle / unique-quadrilateral graph.
//!
//! Every verdict here is decided in integer arithmetic. The `f64` values are
//! for display.

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// Triangle-free edge bound `n^2 / 4`, exactly.
pub fn mantel_bound(n: u64) -> Ratio<u64> {
    Ratio::new(n * n, 4)
}

/// Largest edge count a triangle-free graph on `n` vertices can have.
pub fn mantel_edge_limit(n: u64) -> u64 {
    n * n / 4
}

/// C4-free edge bound `n (1 + sqrt(4n - 3)) / 4`. Zero for `n = 0`.
pub fn reiman_bound(n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let n = n as f64;
    n * (1.0 + (4.0 * n - 3.0).sqrt()) / 4.0
}

/// Exact test of `e <= reiman_bound(n)` for an integer edge count `e`.
///
/// `4e <= n + n s` with `s = sqrt(4n - 3)` is `4e - n <= n s`, which for a
/// positive left side squares to `(4e - n)^2 <= n^2 (4n - 3)`.
pub fn within_reiman_bound(n: u64, edges: u64) -> bool {
    if n == 0 {
        return edges == 0;
    }
    let (n, e) = (n as i128, edges as i128);
    let lhs = 4 * e - n;
    lhs <= 0 || lhs * lhs <= n * n * (4 * n - 3)
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundsReport {
    pub n: u64,
    pub total_pairs: u64,
    pub red_bound: Ratio<u64>,
    pub blue_bound_approx: f64,
    pub inequality_holds: bool,
}

impl Serialize for BoundsReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Fraction {
            num: u64,
            den: u64,
        }
        let mut s = serializer.serialize_struct("BoundsReport", 5)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("total_pairs", &self.total_pairs)?;
        s.serialize_field(
            "red_bound",
            &Fraction {
                num: *self.red_bound.numer(),
                den: *self.red_bound.denom(),
            },
        )?;
        s.serialize_field("blue_bound_approx", &self.blue_bound_approx)?;
        s.serialize_field("inequality_holds", &self.inequality_holds)?;
        s.end()
    }
}

/// Decides `C(n,2) <= n^2/4 + n(1 + sqrt(4n-3))/4`.
///
/// Multiplying by `4/n` reduces it to `n - 3 <= sqrt(4n - 3)`, which holds
/// outright for `n <= 3` and otherwise iff `(n - 3)^2 <= 4n - 3`.
pub fn counting_inequality(n: u64) -> BoundsReport {
    let holds = n <= 3 || {
        let d = (n - 3) as u128;
        d * d <= 4 * n as u128 - 3
    };
    BoundsReport {
        n,
        total_pairs: n * n.saturating_sub(1) / 2,
        red_bound: mantel_bound(n),
        blue_bound_approx: reiman_bound(n),
        inequality_holds: holds,
    }
}

/// Largest `n` for which the counting inequality holds, found by scanning
/// upward from 0 until the first failure.
pub fn max_feasible_n() -> u64 {
    let mut n = 0;
    while counting_inequality(n + 1).inequality_holds {
        n += 1;
    }
    n
}
