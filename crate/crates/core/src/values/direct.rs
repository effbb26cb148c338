//! The named values computed straight from an explicit game, through the
//! quotient game, restrictions and zero-normalization rather than through a
//! [`GameSummary`](crate::game::GameSummary). Used as a cross-check.

use super::ValueKind;
use crate::error::Result;
use crate::game::{quotient_game, restrict, zero_normalize, Allocation, ExplicitGame, Partition};
use crate::scalar::Scalar;

pub fn compute<T: Scalar>(kind: ValueKind, g: &ExplicitGame<T>, p: &Partition) -> Result<Allocation<T>> {
    let n = g.n();
    let count = |x: usize| T::from_count(x);
    if p.n() != n {
        return Err(crate::error::Error::PartitionMismatch {
            game: n,
            partition: p.n(),
        });
    }
    let shares = match kind {
        ValueKind::Ed => (0..n).map(|_| g.total().clone() / count(n)).collect(),
        ValueKind::Esd => {
            let surplus = zero_normalize(g).total().clone();
            (0..n)
                .map(|i| g.singleton(i).clone() + surplus.clone() / count(n))
                .collect()
        }
        ValueKind::Edu => (0..n)
            .map(|i| g.total().clone() / count(p.m() * p.union_size(p.union_of(i))))
            .collect(),
        ValueKind::Esd1u => {
            // ESD on the quotient game, then equal split inside each union
            let q = quotient_game(g, p)?;
            let q_surplus = zero_normalize(&q).total().clone();
            (0..n)
                .map(|i| {
                    let k = p.union_of(i);
                    let pk = p.union_size(k);
                    q.singleton(k).clone() / count(pk) + q_surplus.clone() / count(p.m() * pk)
                })
                .collect()
        }
        ValueKind::Esd2u => {
            let q = quotient_game(g, p)?;
            let q_surplus = zero_normalize(&q).total().clone();
            let inner: Vec<T> = (0..p.m())
                .map(|k| {
                    let (sub, _) = restrict(g, p.mask(k))?;
                    Ok(zero_normalize(&sub).total().clone())
                })
                .collect::<Result<_>>()?;
            (0..n)
                .map(|i| {
                    let k = p.union_of(i);
                    let pk = p.union_size(k);
                    g.singleton(i).clone()
                        + inner[k].clone() / count(pk)
                        + q_surplus.clone() / count(p.m() * pk)
                })
                .collect()
        }
        ValueKind::Esd3u => {
            // v(i) plus ED^U of the zero-normalized game
            let normalized = zero_normalize(g);
            let edu = compute(ValueKind::Edu, &normalized, p)?;
            (0..n)
                .map(|i| g.singleton(i).clone() + edu[i].clone())
                .collect()
        }
    };
    Ok(Allocation::new(shares))
}
