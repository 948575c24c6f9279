//! Randomized curve pipelines: plane models, Hartshorne–Rao modules and space
//! curves, canonical genus-8 curves in G(2,6) and their re-embeddings, the
//! genus-14 residual construction and the genus-7 degree-14 example.

mod genus14;
mod genus7;
mod linalg;
mod plane;
mod space;

pub use genus14::{
    random_canonical_genus8_with_8_points, random_curve_genus14, random_normal_curve_genus8_degree14,
    CurveWithMarkedPoints, Genus14Curve,
};
pub use genus7::{random_genus7_degree14_curve, Genus7Curve};
pub use plane::{
    check_genus11_candidate, distinct_plane_points, points_shape, random_distinct_plane_points,
    random_nodal_plane_curve, search_plane_genus11_curve, Genus11Search, PlaneCurve,
};
pub use space::{
    hartshorne_rao_target_numerator, random_hartshorne_rao_module, random_space_curve_genus12_degree13,
    HartshorneRaoPresentation, SpaceCurve,
};

use crate::arith::SeededRng;
use crate::error::{Error, Result};
use crate::ring::binomial;
use serde::Serialize;

/// Redraws allowed by default for a pipeline's random choices.
pub const DEFAULT_ATTEMPTS: usize = 32;

/// Brill–Noether numerics of a linear series `g^r_d` on a genus-`g` curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BrillNoetherData {
    pub g: i64,
    pub r: i64,
    pub d: i64,
    /// `g − (r+1)(g − d + r)`.
    pub rho: i64,
    /// Nodes of a plane model, `C(d−1, 2) − g`; only meaningful for `r = 2`.
    pub delta: i64,
}

/// Least degree with `ρ ≥ 0`: `⌈((r+1)(g+r) − g) / (r+1)⌉`.
pub fn dmin(r: i64, g: i64) -> i64 {
    let num = (r + 1) * (g + r) - g;
    num.div_euclid(r + 1) + i64::from(num.rem_euclid(r + 1) != 0)
}

pub fn brill_noether(g: i64, r: i64, d: i64) -> BrillNoetherData {
    BrillNoetherData {
        g,
        r,
        d,
        rho: g - (r + 1) * (g - d + r),
        delta: binomial(d - 1, 2) as i64 - g,
    }
}

/// A value produced by a retried random draw, with the attempt that produced
/// it: `attempts` counts draws including the successful one and `stream` is
/// the substream id of the winning draw.
#[derive(Clone, Debug)]
pub struct Attempted<T> {
    pub value: T,
    pub attempts: usize,
    pub stream: u64,
}

/// Runs `draw` on substreams `0, 1, ...` of `rng` until it returns a value.
pub fn retry<T>(
    what: &str,
    rng: &SeededRng,
    max_attempts: usize,
    mut draw: impl FnMut(&mut SeededRng) -> Result<Option<T>>,
) -> Result<Attempted<T>> {
    for k in 0..max_attempts {
        let mut sub = rng.substream(k as u64);
        let stream = sub.stream();
        if let Some(value) = draw(&mut sub)? {
            if k > 0 {
                log::info!("{what}: success after {} draws", k + 1);
            }
            return Ok(Attempted {
                value,
                attempts: k + 1,
                stream,
            });
        }
        log::info!("{what}: draw {} rejected", k + 1);
    }
    Err(Error::RetriesExhausted {
        what: what.to_string(),
        attempts: max_attempts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn brill_noether_examples() {
        assert_eq!(dmin(2, 10), 9);
        let bn = brill_noether(10, 2, 9);
        assert_eq!((bn.delta, bn.rho), (18, 1));
        assert_eq!(dmin(2, 0), 2);
        assert_eq!(brill_noether(0, 2, 2).delta, 0);
        assert_eq!(dmin(2, 11), 10);
        assert_eq!(brill_noether(11, 2, 10).delta, 25);
        assert_eq!(brill_noether(11, 2, 10).rho, 2);
        assert_eq!(dmin(2, 7), 7);
        assert_eq!(brill_noether(7, 2, 7).delta, 8);
    }

    #[test]
    fn retry_counts_attempts() {
        let rng = SeededRng::from_seed(1);
        let mut n = 0;
        let got = retry("test", &rng, 5, |_| {
            n += 1;
            Ok((n == 3).then_some(n))
        })
        .unwrap();
        assert_eq!((got.value, got.attempts), (3, 3));
        assert_eq!(got.stream, rng.substream(2).stream());
        let e = retry::<()>("never", &rng, 4, |_| Ok(None)).unwrap_err();
        assert!(matches!(e, Error::RetriesExhausted { attempts: 4, .. }));
    }

    proptest! {
        #[test]
        fn dmin_is_least_degree_with_nonnegative_rho(g in 0i64..40, r in 1i64..6) {
            let d = dmin(r, g);
            prop_assert!(brill_noether(g, r, d).rho >= 0);
            prop_assert!(brill_noether(g, r, d - 1).rho < 0);
        }
    }
}
