use serde::Serialize;

use crate::error::{Error, Result};

/// How a rational curve with normal bundle `O(a) ⊕ O(b)` moves.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Rigidity {
    /// `h⁰(N) = 0`.
    Rigid,
    /// `h⁰(N) = 1`: deforms to first order along a single direction.
    FirstOrder,
    /// `h⁰(N) ≥ 2`.
    HigherDim { h0: u64 },
}

/// `N = O(a) ⊕ O(b)` for a smooth rational curve on a Calabi–Yau threefold.
/// `c_1(N) = c_1(T_X|_C) − c_1(T_C) = −2` forces `a + b = −2`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct NormalBundleSplit {
    pub a: i64,
    pub b: i64,
    pub h0: u64,
    pub rigidity: Rigidity,
}

/// `b = −2 − a`, `h⁰ = max(a+1, 0) + max(b+1, 0)`.
pub fn normal_bundle_classify(a: i64) -> NormalBundleSplit {
    let b = -2 - a;
    let h0 = ((a + 1).max(0) + (b + 1).max(0)) as u64;
    let rigidity = match h0 {
        0 => Rigidity::Rigid,
        1 => Rigidity::FirstOrder,
        h0 => Rigidity::HigherDim { h0 },
    };
    NormalBundleSplit { a, b, h0, rigidity }
}

/// Parameter count for degree-`d` rational curves on a quintic threefold.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ClemensCount {
    /// Coefficients of five binary forms of degree `d`: `5(d+1)`.
    pub parameters: u64,
    /// Coefficients of the degree-`5d` restriction of the quintic: `5d+1`.
    pub conditions: u64,
    /// Dimension of `GL_2` acting on `(u, v)`.
    pub reparametrizations: u64,
    pub excess: i64,
}

pub fn clemens_excess(d: u64) -> Result<ClemensCount> {
    if d == 0 {
        return Err(Error::Input("curve degree must be positive".into()));
    }
    let parameters = 5 * (d + 1);
    let conditions = 5 * d + 1;
    let reparametrizations = 4;
    let excess = parameters as i64 - conditions as i64 - reparametrizations as i64;
    Ok(ClemensCount {
        parameters,
        conditions,
        reparametrizations,
        excess,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_examples() {
        let s = normal_bundle_classify(-1);
        assert_eq!((s.a, s.b, s.rigidity), (-1, -1, Rigidity::Rigid));
        let s = normal_bundle_classify(0);
        assert_eq!((s.b, s.rigidity), (-2, Rigidity::FirstOrder));
        let s = normal_bundle_classify(1);
        assert_eq!((s.b, s.rigidity), (-3, Rigidity::HigherDim { h0: 2 }));
        // symmetric in a and b
        assert_eq!(normal_bundle_classify(-3).h0, 2);
    }

    #[test]
    fn clemens_examples() {
        let c = clemens_excess(1).unwrap();
        assert_eq!(
            (c.parameters, c.conditions, c.reparametrizations, c.excess),
            (10, 6, 4, 0)
        );
        let c = clemens_excess(2).unwrap();
        assert_eq!(
            (c.parameters, c.conditions, c.reparametrizations, c.excess),
            (15, 11, 4, 0)
        );
        let c = clemens_excess(100).unwrap();
        assert_eq!(
            (c.parameters, c.conditions, c.reparametrizations, c.excess),
            (505, 501, 4, 0)
        );
        assert!(clemens_excess(0).is_err());
    }
}
