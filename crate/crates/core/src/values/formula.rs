//! The common shape behind every value in this crate.
//!
//! Each egalitarian value first hands every player a *base* amount and then
//! divides a *residual* according to a *split* rule:
//!
//! ```text
//! share_i = base_i + residual * weight_i
//! ```
//!
//! The six named values and all independence counterexamples (apart from
//! the plain stand-alone value) are points of the `Base × Split` grid.

use crate::error::{Error, Result};
use crate::game::{Allocation, GameSummary, PlayerId};
use crate::scalar::{self, Scalar};

/// What each player receives before the residual is split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    /// Nothing; the residual is `v(N)`.
    Zero,
    /// `v(P_k)/p_k`; the residual is `v(N) - Σ_l v(P_l)`.
    UnionAverage,
    /// `v(i) + (v(P_k) - Σ_{j∈P_k} v(j))/p_k`; residual `v(N) - Σ_l v(P_l)`.
    UnionSurplus,
    /// `v(i)`; the residual is `v(N) - Σ_j v(j)`.
    Standalone,
}

/// How the residual is divided among players.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Split {
    /// Equally among unions, then equally inside each union: `1/(m p_k)`.
    AcrossUnions,
    /// Equally among all players: `1/n`.
    PerCapita,
    /// Inside each union the smallest-index member gets `2/(m p_k)` and the
    /// rest `(p_k - 2)/(m p_k (p_k - 1))`. Needs `p_k >= 2`.
    MinIndex,
    /// Inside each union the members with minimal `v(j)` (the set `Z_k`)
    /// get `2/(m p_k |Z_k|)` and the rest `(p_k - 2)/(m p_k (p_k - |Z_k|))`.
    /// Needs `Z_k ≠ P_k`.
    MinStandalone,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `φ_i = v(i)`. Not efficient.
    StandaloneOnly,
    Divide { base: Base, split: Split },
}

impl Formula {
    pub const fn divide(base: Base, split: Split) -> Self {
        Formula::Divide { base, split }
    }

    pub fn is_efficient(self) -> bool {
        !matches!(self, Formula::StandaloneOnly)
    }
}

/// `weight_i = numerator / denominator`, kept as integers so that rational
/// scalars stay exact and float results do not depend on how the fraction
/// was formed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Weight {
    numerator: usize,
    denominator: usize,
}

fn weights<T: Scalar>(s: &GameSummary<T>, split: Split, label: &str) -> Result<Vec<Weight>> {
    let p = s.partition();
    let m = p.m();
    let mut out = vec![
        Weight {
            numerator: 0,
            denominator: 1
        };
        s.n()
    ];
    for (k, members) in p.unions().iter().enumerate() {
        let pk = members.len();
        match split {
            Split::AcrossUnions => {
                for &i in members {
                    out[i] = Weight {
                        numerator: 1,
                        denominator: m * pk,
                    };
                }
            }
            Split::PerCapita => {
                for &i in members {
                    out[i] = Weight {
                        numerator: 1,
                        denominator: s.n(),
                    };
                }
            }
            Split::MinIndex => {
                if pk < 2 {
                    return Err(Error::VariantDomain {
                        variant: label.to_string(),
                        reason: format!("union {k} has a single member"),
                    });
                }
                let first = p.min_member(k);
                for &i in members {
                    out[i] = if i == first {
                        Weight {
                            numerator: 2,
                            denominator: m * pk,
                        }
                    } else {
                        Weight {
                            numerator: pk - 2,
                            denominator: m * pk * (pk - 1),
                        }
                    };
                }
            }
            Split::MinStandalone => {
                let z = minimal_standalone(s, k);
                if z.len() == pk {
                    return Err(Error::VariantDomain {
                        variant: label.to_string(),
                        reason: format!("every member of union {k} has the minimal stand-alone worth"),
                    });
                }
                for &i in members {
                    out[i] = if z.contains(&i) {
                        Weight {
                            numerator: 2,
                            denominator: m * pk * z.len(),
                        }
                    } else {
                        Weight {
                            numerator: pk - 2,
                            denominator: m * pk * (pk - z.len()),
                        }
                    };
                }
            }
        }
    }
    Ok(out)
}

/// `Z_k`: members of union `k` whose stand-alone worth is minimal.
pub fn minimal_standalone<T: Scalar>(s: &GameSummary<T>, k: usize) -> Vec<PlayerId> {
    let members = s.partition().union(k);
    let min = members
        .iter()
        .map(|&j| s.singleton(j))
        .fold(None::<&T>, |acc, w| match acc {
            Some(a) if a <= w => Some(a),
            _ => Some(w),
        })
        .expect("unions are nonempty");
    members
        .iter()
        .copied()
        .filter(|&j| s.singleton(j).approx_eq(min))
        .collect()
}

fn base_shares<T: Scalar>(s: &GameSummary<T>, base: Base) -> (Vec<T>, T) {
    let p = s.partition();
    let n = s.n();
    match base {
        Base::Zero => (vec![T::zero(); n], s.total().clone()),
        Base::UnionAverage => {
            let residual = s.total().clone() - scalar::sum(s.union_worths());
            let mut shares = vec![T::zero(); n];
            for (k, members) in p.unions().iter().enumerate() {
                let each = s.union_worth(k).clone() / T::from_count(members.len());
                for &i in members {
                    shares[i] = each.clone();
                }
            }
            (shares, residual)
        }
        Base::UnionSurplus => {
            let residual = s.total().clone() - scalar::sum(s.union_worths());
            let mut shares = vec![T::zero(); n];
            for (k, members) in p.unions().iter().enumerate() {
                let inner = (s.union_worth(k).clone() - s.union_singleton_sum(k))
                    / T::from_count(members.len());
                for &i in members {
                    shares[i] = s.singleton(i).clone() + inner.clone();
                }
            }
            (shares, residual)
        }
        Base::Standalone => (
            s.singletons().to_vec(),
            s.total().clone() - scalar::sum(s.singletons()),
        ),
    }
}

/// Evaluates `formula` on `s`. `label` names the value in domain errors.
pub fn evaluate<T: Scalar>(formula: Formula, s: &GameSummary<T>, label: &str) -> Result<Allocation<T>> {
    match formula {
        Formula::StandaloneOnly => Ok(Allocation::new(s.singletons().to_vec())),
        Formula::Divide { base, split } => {
            let w = weights(s, split, label)?;
            let (mut shares, residual) = base_shares(s, base);
            for (share, weight) in shares.iter_mut().zip(w) {
                if weight.numerator == 0 {
                    continue;
                }
                let part = residual.clone() * T::from_count(weight.numerator)
                    / T::from_count(weight.denominator);
                *share = share.clone() + part;
            }
            Ok(Allocation::new(shares))
        }
    }
}
