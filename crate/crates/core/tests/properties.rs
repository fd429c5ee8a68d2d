//! Randomised invariants of the correspondence and its building blocks.

use proptest::prelude::*;
use proptest::sample::Index;

use skewtab::shapes::{self, Partition, SkewShape};
use skewtab::sign::{word_invsign, word_sign, Sign};
use skewtab::skew_rs::{self, Quadruple, StepKind, Triple};
use skewtab::tableaux::{self, Tableau};
use skewtab::words::Permutation;

const ALPHAS: &[&[u32]] = &[&[], &[1], &[2], &[1, 1], &[2, 1], &[3, 1], &[2, 2], &[3, 2, 1], &[2, 2, 1, 1]];

fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn build_triple(
    alpha: &Partition,
    n: u32,
    perm: Vec<u32>,
    positions: Vec<u32>,
    mu_pick: Index,
    t_pick: Index,
    u_pick: Index,
) -> Triple {
    let subshapes: Vec<Partition> =
        (0..=n.min(alpha.size())).flat_map(|k| shapes::enumerate_inner_subshapes(alpha, k)).collect();
    let mu = mu_pick.get(&subshapes).clone();
    let shape = SkewShape::new(alpha.clone(), mu).unwrap();
    let k = shape.size() as usize;
    let tabs = tableaux::enumerate_standard_tableaux(&shape);
    let mut indexset = positions[..k].to_vec();
    indexset.sort_unstable();
    let mut images = perm;
    let mut vals: Vec<u32> = indexset.iter().map(|&i| images[i as usize - 1]).collect();
    vals.sort_unstable();
    for (&i, v) in indexset.iter().zip(vals) {
        images[i as usize - 1] = v;
    }
    let quad = Quadruple {
        perm: Permutation::new(images).unwrap(),
        indexset,
        tstd: t_pick.get(&tabs).clone(),
        ustd: u_pick.get(&tabs).clone(),
    };
    skew_rs::lemma6_backward(&quad).unwrap()
}

fn triples() -> impl Strategy<Value = Triple> {
    (0..ALPHAS.len(), 0u32..=6)
        .prop_flat_map(|(ai, n)| {
            let line: Vec<u32> = (1..=n).collect();
            (
                Just(ai),
                Just(n),
                Just(line.clone()).prop_shuffle(),
                Just(line).prop_shuffle(),
                any::<Index>(),
                any::<Index>(),
                any::<Index>(),
            )
        })
        .prop_map(|(ai, n, perm, positions, m, t, u)| build_triple(&partition(ALPHAS[ai]), n, perm, positions, m, t, u))
}

fn images() -> impl Strategy<Value = (Tableau<u32>, Tableau<u32>)> {
    (0..ALPHAS.len(), 0u32..=5, any::<Index>()).prop_map(|(ai, n, pick)| {
        let all = skew_rs::enumerate_images(&partition(ALPHAS[ai]), n);
        pick.get(&all).clone()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn forward_then_reverse_is_identity(triple in triples()) {
        let out = skew_rs::forward(&triple, true).unwrap();
        prop_assert!(out.p.is_standard() && out.q.is_standard());
        prop_assert_eq!(out.p.shape(), out.q.shape());
        prop_assert_eq!(out.p.shape().inner(), &triple.alpha);
        prop_assert_eq!(out.p.len() as u32, triple.n);
        prop_assert!(skew_rs::sign_relation_holds(&triple, &out.p, &out.q));
        prop_assert_eq!(skew_rs::reverse(&out.p, &out.q).unwrap(), triple);
    }

    #[test]
    fn trace_ledgers_chain_from_t_to_p(triple in triples()) {
        let out = skew_rs::forward(&triple, false).unwrap();
        prop_assert_eq!(out.trace.len() as u32, triple.n);
        let mut sign = triple.t.sign();
        for (k, step) in (1..).zip(&out.trace) {
            prop_assert_eq!(step.step, k);
            let external = triple.pi.top().contains(&k);
            prop_assert_eq!(step.kind == StepKind::External, external);
            prop_assert_eq!(step.m.is_some(), external);
            prop_assert!(step.ledger_holds(), "ledger fails at step {}", k);
            prop_assert!(step.path_is_well_formed());
            prop_assert_eq!(step.sign_p_before, sign);
            sign = step.sign_p_after;
        }
        prop_assert_eq!(sign, out.p.sign());
    }

    #[test]
    fn reverse_then_forward_is_identity((p, q) in images()) {
        let triple = skew_rs::reverse(&p, &q).unwrap();
        let out = skew_rs::forward(&triple, true).unwrap();
        prop_assert_eq!(out.p, p);
        prop_assert_eq!(out.q, q);
    }

    #[test]
    fn quadruple_round_trip(triple in triples()) {
        let quad = skew_rs::lemma6_forward(&triple);
        prop_assert!(quad.perm.is_increasing_at(&quad.indexset));
        prop_assert_eq!(quad.perm.sign(), triple.pi.complete().sign());
        prop_assert_eq!(quad.tstd.sign(), triple.t.sign());
        prop_assert_eq!(quad.ustd.sign(), triple.u.sign());
        prop_assert!(quad.tstd.is_standard() && quad.ustd.is_standard());
        prop_assert_eq!(skew_rs::lemma6_backward(&quad).unwrap(), triple);
    }

    #[test]
    fn triples_survive_json(triple in triples()) {
        let text = serde_json::to_string(&triple).unwrap();
        let back: Triple = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, triple.clone());
    }

    #[test]
    fn tableaux_survive_json((p, q) in images()) {
        let back: Tableau<u32> = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
        let ghosted = q.ghosted();
        let text = serde_json::to_string(&ghosted).unwrap();
        prop_assert_eq!(serde_json::from_str::<Tableau<_>>(&text).unwrap(), ghosted);
    }

    #[test]
    fn sign_times_invsign_is_fixed(word in Just((1..=9u32).collect::<Vec<_>>()).prop_shuffle(), len in 0usize..=9) {
        let w = &word[..len];
        let pairs = (len * len.saturating_sub(1) / 2) as u64;
        prop_assert_eq!(word_sign(w) * word_invsign(w), Sign::from_parity(pairs));
    }

    #[test]
    fn standardizing_keeps_the_sign(triple in triples()) {
        let std = triple.t.standardize();
        prop_assert_eq!(std.sign(), triple.t.sign());
        prop_assert_eq!(std.shape(), triple.t.shape());
    }
}
