//! Property tests over randomly generated words, compositions and
//! decomposition instances.

use proptest::prelude::*;

use ecdecomp::families;
use ecdecomp::model::{
    composition_of, hamming_distance, read_code, split_pair_color, write_code, Code, CodeFile,
    Codeword, Composition,
};
use ecdecomp::search::{enumerate_blocks, BlockShape};

fn arb_word(q: u32, n: usize) -> impl Strategy<Value = Codeword> {
    proptest::collection::vec(0..q, n).prop_map(move |symbols| Codeword::new(symbols, q).unwrap())
}

/// Compositions with up to 4 parts, some possibly zero, weight >= 1.
fn arb_composition() -> impl Strategy<Value = Composition> {
    proptest::collection::vec(0u32..4, 1..=4)
        .prop_filter("needs positive weight", |parts| parts.iter().sum::<u32>() >= 1)
        .prop_map(|parts| Composition::new(parts).unwrap())
}

proptest! {
    #[test]
    fn hamming_is_a_metric(
        u in arb_word(3, 6),
        v in arb_word(3, 6),
        t in arb_word(3, 6),
    ) {
        let duv = hamming_distance(&u, &v).unwrap();
        let dvu = hamming_distance(&v, &u).unwrap();
        prop_assert_eq!(duv, dvu);
        prop_assert_eq!(hamming_distance(&u, &u).unwrap(), 0);
        prop_assert_eq!(duv == 0, u == v);
        let dut = hamming_distance(&u, &t).unwrap();
        let dtv = hamming_distance(&t, &v).unwrap();
        prop_assert!(duv <= dut + dtv, "triangle inequality: {} > {} + {}", duv, dut, dtv);
    }

    #[test]
    fn composition_parts_sum_to_weight(u in arb_word(4, 8)) {
        let comp = composition_of(&u);
        prop_assert_eq!(comp.weight(), u.weight());
        prop_assert_eq!(comp.parts().len() as u32, u.q() - 1);
    }

    #[test]
    fn code_file_roundtrips(words in proptest::collection::btree_set(
        proptest::collection::vec(0u32..3, 5), 0..6)
    ) {
        let codewords: Vec<Codeword> =
            words.iter().map(|w| Codeword::new(w.clone(), 3).unwrap()).collect();
        let code = CodeFile::Qary(Code::new(3, 5, codewords.clone(), None).unwrap());
        let mut buf = Vec::new();
        write_code(&mut buf, &code).unwrap();
        let CodeFile::Qary(back) = read_code(&buf[..]).unwrap() else { panic!() };
        prop_assert_eq!(back.codewords(), &codewords[..]);
    }

    #[test]
    fn gstar_forgets_to_g(comp in arb_composition()) {
        let g = families::build_g(&comp).unwrap();
        let gs = families::build_gstar(&comp).unwrap();
        let base = comp.q() - 1;
        let forgotten: std::collections::BTreeSet<_> = gs
            .edges()
            .map(|(u, v, c)| (u, v, split_pair_color(c, base).0))
            .collect();
        let original: std::collections::BTreeSet<_> = g.edges().collect();
        prop_assert_eq!(forgotten, original);
    }

    #[test]
    fn degree_sums_match_edge_vector(comp in arb_composition()) {
        for graph in [families::build_g(&comp).unwrap(), families::build_gstar(&comp).unwrap()] {
            let ev = graph.edge_vector();
            let mut in_sums = vec![0u64; ev.entries().len()];
            let mut out_sums = vec![0u64; ev.entries().len()];
            for v in 1..=graph.vertex_count() {
                let dv = graph.degree_vector(v).unwrap();
                for c in 0..ev.entries().len() {
                    in_sums[c] += dv.entries()[2 * c];
                    out_sums[c] += dv.entries()[2 * c + 1];
                }
            }
            prop_assert_eq!(&in_sums[..], ev.entries());
            prop_assert_eq!(&out_sums[..], ev.entries());
        }
    }

    #[test]
    fn block_count_matches_multinomial(
        parts in proptest::collection::vec(0u32..3, 1..=3),
        extra in 0u32..3,
    ) {
        prop_assume!(parts.iter().sum::<u32>() >= 1);
        let comp = Composition::new(parts.clone()).unwrap();
        let w = comp.weight();
        let n = w + extra;
        let family = families::DigraphFamily {
            name: "test".into(),
            color_count: comp.q() - 1,
            params: None,
            members: vec![families::FamilyMember {
                label: "main".into(),
                main: true,
                graph: families::build_g(&comp).unwrap(),
                classes: {
                    let mut next = 1u32;
                    parts
                        .iter()
                        .map(|&p| {
                            let class: Vec<u32> = (next..next + p).collect();
                            next += p;
                            class
                        })
                        .collect()
                },
            }],
        };
        if families::build_g(&comp).unwrap().edge_count() == 0 {
            return Ok(());
        }
        let blocks = enumerate_blocks(&family, n).unwrap();
        // n! / ((n-w)! * prod w_i!)
        let mut expected = 1u64;
        for k in (u64::from(n - w) + 1)..=u64::from(n) {
            expected *= k;
        }
        for &p in &parts {
            for k in 1..=u64::from(p) {
                expected /= k;
            }
        }
        prop_assert_eq!(blocks.len() as u64, expected);
        // Every block is class-shaped with the right sizes.
        for b in &blocks {
            match &b.shape {
                BlockShape::Classes(classes) => {
                    prop_assert_eq!(classes.len(), parts.len());
                    for (class, &p) in classes.iter().zip(&parts) {
                        prop_assert_eq!(class.len() as u32, p);
                    }
                }
                BlockShape::Pair(..) => prop_assert!(false, "main member emitted a pair"),
            }
        }
    }
}
