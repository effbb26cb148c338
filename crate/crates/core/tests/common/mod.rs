#![allow(dead_code)]

use unionshare::axioms::{random_game, random_partition, Structure, WorthDist};
use unionshare::game::{
    add_games, additive_part, scale_game, sub_games, summary_from_explicit, union_floor_game, zero_normalize,
};
use unionshare::values::direct;
use unionshare::{Allocation, ExplicitGame, Partition, Scalar, ValueKind};

pub type Check = Result<(), String>;

pub fn ensure<T: Scalar>(what: &str, got: &Allocation<T>, want: &Allocation<T>) -> Check {
    if got.approx_eq(want) {
        Ok(())
    } else {
        Err(format!("{what}: got {:?}, want {:?}", got.shares(), want.shares()))
    }
}

pub fn value<T: Scalar>(kind: ValueKind, g: &ExplicitGame<T>, p: &Partition) -> Allocation<T> {
    kind.compute(&summary_from_explicit(g, p).expect("partition matches game"))
}

/// Seeded game and partition number `seed` of a reproducible sample.
pub fn sample<T: Scalar>(seed: u64, worths: WorthDist) -> (ExplicitGame<T>, Partition) {
    let n = 1 + (seed % 6) as usize;
    let g = random_game(n, worths, Structure::Generic, seed).expect("valid generator");
    let p = random_partition(n, seed ^ 0x9e37_79b9, 1).expect("valid partition");
    (g, p)
}

/// Under the singleton partition each union value is its base value.
pub fn coalitional_reduction<T: Scalar>(g: &ExplicitGame<T>) -> Check {
    let singletons = Partition::singletons(g.n());
    for kind in ValueKind::UNION_VALUES {
        ensure(
            &format!("{} at singletons", kind.name()),
            &value(kind, g, &singletons),
            &value(kind.coalitional_base(), g, &singletons),
        )?;
    }
    Ok(())
}

/// With one union holding everybody the values reduce to ED or ESD.
pub fn one_union_collapse<T: Scalar>(g: &ExplicitGame<T>) -> Check {
    let grand = Partition::grand(g.n());
    let ed = value(ValueKind::Ed, g, &grand);
    let esd = value(ValueKind::Esd, g, &grand);
    ensure("edu collapse", &value(ValueKind::Edu, g, &grand), &ed)?;
    ensure("esd1u collapse", &value(ValueKind::Esd1u, g, &grand), &ed)?;
    ensure("esd2u collapse", &value(ValueKind::Esd2u, g, &grand), &esd)?;
    ensure("esd3u collapse", &value(ValueKind::Esd3u, g, &grand), &esd)
}

/// Every value agrees with its independent computation on the full game.
pub fn explicit_vs_summary<T: Scalar>(g: &ExplicitGame<T>, p: &Partition) -> Check {
    for kind in ValueKind::ALL {
        let independent = direct::compute(kind, g, p).map_err(|e| e.to_string())?;
        ensure(kind.name(), &value(kind, g, p), &independent)?;
    }
    Ok(())
}

fn union_average<T: Scalar>(g: &ExplicitGame<T>, p: &Partition) -> Allocation<T> {
    Allocation::new(
        (0..g.n())
            .map(|i| {
                let k = p.union_of(i);
                g.worth(p.mask(k)).clone() / T::from_count(p.union_size(k))
            })
            .collect(),
    )
}

fn singletons<T: Scalar>(g: &ExplicitGame<T>) -> Allocation<T> {
    Allocation::new((0..g.n()).map(|i| g.singleton(i).clone()).collect())
}

/// `v = v¹ + v²`: ESD1U splits over the parts, pays `v(P_k)/p_k` on `v¹`
/// and equals EDU on `v²`.
pub fn esd1u_decomposition<T: Scalar>(g: &ExplicitGame<T>, p: &Partition) -> Check {
    let v1 = union_floor_game(g, p).map_err(|e| e.to_string())?;
    let v2 = sub_games(g, &v1).map_err(|e| e.to_string())?;
    let a1 = value(ValueKind::Esd1u, &v1, p);
    let a2 = value(ValueKind::Esd1u, &v2, p);
    ensure("esd1u(v1) + esd1u(v2)", &a1.add(&a2), &value(ValueKind::Esd1u, g, p))?;
    ensure("esd1u(v1)", &a1, &union_average(g, p))?;
    ensure("esd1u(v2)", &a2, &value(ValueKind::Edu, &v2, p))
}

/// `v = vᵃ + v⁰¹ + v⁰²`: ESD2U pays `v(i)` on `vᵃ`, `v⁰(P_k)/p_k` on
/// `v⁰¹` and EDU on `v⁰²`.
pub fn esd2u_decomposition<T: Scalar>(g: &ExplicitGame<T>, p: &Partition) -> Check {
    let va = additive_part(g);
    let v0 = zero_normalize(g);
    let v01 = union_floor_game(&v0, p).map_err(|e| e.to_string())?;
    let v02 = sub_games(&v0, &v01).map_err(|e| e.to_string())?;
    let rebuilt = add_games(&va, &add_games(&v01, &v02).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    if !rebuilt.approx_eq(g) {
        return Err("va + v01 + v02 differs from v".into());
    }
    let aa = value(ValueKind::Esd2u, &va, p);
    let a01 = value(ValueKind::Esd2u, &v01, p);
    let a02 = value(ValueKind::Esd2u, &v02, p);
    ensure("esd2u sum", &aa.add(&a01).add(&a02), &value(ValueKind::Esd2u, g, p))?;
    ensure("esd2u(va)", &aa, &singletons(g))?;
    ensure("esd2u(v01)", &a01, &union_average(&v0, p))?;
    ensure("esd2u(v02)", &a02, &value(ValueKind::Edu, &v02, p))
}

/// `v = vᵃ + v⁰`: ESD3U pays `v(i)` plus EDU of `v⁰`.
pub fn esd3u_decomposition<T: Scalar>(g: &ExplicitGame<T>, p: &Partition) -> Check {
    let va = additive_part(g);
    let v0 = zero_normalize(g);
    ensure("esd3u(va)", &value(ValueKind::Esd3u, &va, p), &singletons(g))?;
    ensure(
        "esd3u = v(i) + edu(v0)",
        &value(ValueKind::Esd3u, g, p),
        &singletons(g).add(&value(ValueKind::Edu, &v0, p)),
    )
}

/// `φ(c·v + w) = c·φ(v) + φ(w)` for every named value.
pub fn linearity<T: Scalar>(v: &ExplicitGame<T>, w: &ExplicitGame<T>, c: &T, p: &Partition) -> Check {
    let combined = add_games(&scale_game(v, c), w).map_err(|e| e.to_string())?;
    for kind in ValueKind::ALL {
        let want = value(kind, v, p).scale(c).add(&value(kind, w, p));
        ensure(kind.name(), &value(kind, &combined, p), &want)?;
    }
    Ok(())
}
