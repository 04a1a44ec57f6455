//! Curve-counting recipes and the bookkeeping around them.
//!
//! A recipe picks a compact moduli space `M`, a bundle `B` on it whose
//! sections cut out the curves lying on a given variety, and integrates the
//! top Chern class of `B`. A count is only produced when `rank B = dim M`;
//! otherwise the report carries the expected dimension of the family.

mod equivalence;
mod ledger;
mod normal;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::chern::{tautological_bundle, ChernVector, GradedRing};
use crate::error::{Error, Result};
use crate::projbundle::ProjBundleRing;
use crate::schubert::{GrassCtx, Tautological};

pub use equivalence::{
    equivalence_on_projective_space, equivalence_unobstructed, equivalence_zero_dim,
    multiple_cover_weight, CONNECTED_COMPONENT_NOTE,
};
pub use ledger::{
    builtin_ledgers, ledger_check, DegenerationLedger, LedgerComponent, LedgerFile, LedgerVerdict,
    RecordedValue, LEDGER_FORMAT_VERSION,
};
pub use normal::{
    clemens_excess, normal_bundle_classify, ClemensCount, NormalBundleSplit, Rigidity,
};

/// What a recipe produced.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    /// `∫ c_top(B)`, when `rank B = dim M`.
    Count(#[serde(serialize_with = "crate::recipes::bigint_as_string")] BigInt),
    /// `dim M − rank B`: the expected dimension of the family of curves
    /// (negative when none are expected).
    FamilyDimension(i64),
}

/// The projective space and hypersurface degrees a recipe was run for.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Ambient {
    pub projective_dim: usize,
    pub degrees: Vec<u32>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CountReport {
    pub recipe: String,
    pub ambient: Ambient,
    /// Human-readable name of the moduli space.
    pub moduli: String,
    pub moduli_dimension: usize,
    pub bundle_rank: usize,
    pub outcome: Outcome,
    /// Whether the degrees sum to `N + 1`.
    pub calabi_yau: bool,
}

impl CountReport {
    /// Integrates `c_top` through `count` only when the rank matches the
    /// dimension.
    fn evaluate(
        recipe: &str,
        ambient: Ambient,
        moduli: String,
        moduli_dimension: usize,
        bundle_rank: usize,
        count: impl FnOnce() -> Result<BigInt>,
    ) -> Result<Self> {
        let outcome = if bundle_rank == moduli_dimension {
            Outcome::Count(count()?)
        } else {
            Outcome::FamilyDimension(moduli_dimension as i64 - bundle_rank as i64)
        };
        let calabi_yau = ambient.degrees.iter().map(|&d| d as usize).sum::<usize>()
            == ambient.projective_dim + 1;
        Ok(CountReport {
            recipe: recipe.to_string(),
            ambient,
            moduli,
            moduli_dimension,
            bundle_rank,
            outcome,
            calabi_yau,
        })
    }

    pub fn count(&self) -> Option<&BigInt> {
        match &self.outcome {
            Outcome::Count(c) => Some(c),
            Outcome::FamilyDimension(_) => None,
        }
    }

    pub fn family_dimension(&self) -> Option<i64> {
        match self.outcome {
            Outcome::Count(_) => None,
            Outcome::FamilyDimension(d) => Some(d),
        }
    }
}

impl fmt::Display for CountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees: Vec<String> = self.ambient.degrees.iter().map(u32::to_string).collect();
        writeln!(
            f,
            "{}: degrees [{}] in P^{}{}",
            self.recipe,
            degrees.join(","),
            self.ambient.projective_dim,
            if self.calabi_yau { " (Calabi-Yau)" } else { "" }
        )?;
        writeln!(
            f,
            "  moduli {} of dimension {}, bundle rank {}",
            self.moduli, self.moduli_dimension, self.bundle_rank
        )?;
        match &self.outcome {
            Outcome::Count(c) => write!(f, "  count = {c}"),
            Outcome::FamilyDimension(d) => write!(f, "  no finite count: family dimension {d}"),
        }
    }
}

pub(crate) fn bigint_as_string<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// `⊕_i Sym^{d_i}(S*)` on `G(2, N+1)`: the bundle whose sections are the
/// equations of the complete intersection restricted to each line.
pub fn lines_bundle(projective_dim: usize, degrees: &[u32]) -> Result<ChernVector<GrassCtx>> {
    let ctx = GrassCtx::new(2, projective_dim + 1)?;
    let dual = tautological_bundle(ctx, Tautological::SubDual)?;
    Ok(degrees
        .iter()
        .fold(ChernVector::trivial(ctx, 0), |acc, &d| {
            acc.whitney_sum(&dual.sym_power(d as usize))
        }))
}

/// Lines on a complete intersection of hypersurfaces of the given degrees in
/// `P^N`, as `∫_{G(2,N+1)} c_top(⊕ Sym^{d_i} S*)`.
pub fn lines_on_complete_intersection(
    projective_dim: usize,
    degrees: &[u32],
) -> Result<CountReport> {
    if projective_dim < 3 {
        return Err(Error::Input(format!(
            "ambient P^{projective_dim}: need N >= 3"
        )));
    }
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(Error::Input(
            "degrees must be a nonempty list of positive integers".into(),
        ));
    }
    let ctx = GrassCtx::new(2, projective_dim + 1)?;
    let rank: usize = degrees.iter().map(|&d| d as usize + 1).sum();
    CountReport::evaluate(
        "lines",
        Ambient {
            projective_dim,
            degrees: degrees.to_vec(),
        },
        ctx.to_string(),
        ctx.dim(),
        rank,
        || {
            let b = lines_bundle(projective_dim, degrees)?;
            Ok(b.top_class().integrate())
        },
    )
}

/// The conic setup for a hypersurface of degree `d` in `P^4`: the space of
/// plane conics `P(Sym² S*) → G(3,5)` and the bundle
/// `Sym^d S* / (Sym^{d−2} S* ⊗ O(−1))` of degree-`d` forms on the plane
/// modulo multiples of the conic.
pub fn conic_bundle(d: u32) -> Result<(ProjBundleRing, ChernVector<ProjBundleRing>)> {
    if d < 2 {
        return Err(Error::Input(format!(
            "degree {d}: a conic lies on a hypersurface only for d >= 2"
        )));
    }
    let ctx = GrassCtx::new(3, 5)?;
    let dual = tautological_bundle(ctx, Tautological::SubDual)?;
    let space = ProjBundleRing::new(&dual.sym_power(2))?;
    let lift = |b: &crate::schubert::SchubertCycle| space.pullback(b).expect("same base");
    let forms = dual.sym_power(d as usize).map_ring(space.clone(), lift);
    let multiples = dual
        .sym_power(d as usize - 2)
        .map_ring(space.clone(), lift)
        .tensor_line(&space.line_class(-1))?;
    let bundle = forms.whitney_quotient(&multiples)?;
    Ok((space, bundle))
}

/// Conics on a degree-`d` hypersurface in `P^4`; for `d = 5` this is
/// `∫ c_11(B)` over the 11-dimensional space of plane conics.
pub fn conics_on_quintic_type(d: u32) -> Result<CountReport> {
    if d < 2 {
        return Err(Error::Input(format!(
            "degree {d}: a conic lies on a hypersurface only for d >= 2"
        )));
    }
    // dim P(Sym² S*) = 6 + 5; rank B = binom(d+2,2) − binom(d,2) = 2d + 1
    let dim = 11;
    let rank = 2 * d as usize + 1;
    CountReport::evaluate(
        "conics",
        Ambient {
            projective_dim: 4,
            degrees: vec![d],
        },
        "P(Sym^2 S*) over G(3,5)".to_string(),
        dim,
        rank,
        || {
            let (space, bundle) = conic_bundle(d)?;
            debug_assert_eq!(space.top_degree(), dim);
            debug_assert_eq!(bundle.rank(), rank);
            Ok(bundle.top_class().integrate())
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quintic_lines() {
        let r = lines_on_complete_intersection(4, &[5]).unwrap();
        assert_eq!(r.count(), Some(&BigInt::from(2875)));
        assert!(r.calabi_yau);
        assert_eq!((r.moduli_dimension, r.bundle_rank), (6, 6));
    }

    #[test]
    fn cubic_surface_lines() {
        let r = lines_on_complete_intersection(3, &[3]).unwrap();
        assert_eq!(r.count(), Some(&BigInt::from(27)));
        assert!(!r.calabi_yau);
    }

    #[test]
    fn quartic_threefold_has_a_curve_of_lines() {
        let r = lines_on_complete_intersection(4, &[4]).unwrap();
        assert_eq!(r.family_dimension(), Some(1));
        assert_eq!(r.count(), None);
    }

    #[test]
    fn bad_inputs() {
        assert!(lines_on_complete_intersection(2, &[2]).is_err());
        assert!(lines_on_complete_intersection(4, &[]).is_err());
        assert!(lines_on_complete_intersection(4, &[0, 5]).is_err());
        assert!(conics_on_quintic_type(1).is_err());
    }

    #[test]
    fn conic_family_dimensions() {
        assert_eq!(
            conics_on_quintic_type(4).unwrap().family_dimension(),
            Some(2)
        );
        assert_eq!(
            conics_on_quintic_type(3).unwrap().family_dimension(),
            Some(4)
        );
        assert_eq!(
            conics_on_quintic_type(6).unwrap().family_dimension(),
            Some(-2)
        );
    }

    #[test]
    fn report_json_shape() {
        let r = lines_on_complete_intersection(4, &[5]).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["outcome"]["count"], "2875");
        assert_eq!(v["calabi_yau"], true);
        let r = lines_on_complete_intersection(4, &[4]).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["outcome"]["family_dimension"], 1);
    }
}
