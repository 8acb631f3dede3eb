use std::sync::Arc;

use proptest::prelude::*;

use partgroup::cli_io::catalog::parse_catalog;
use partgroup::cli_io::{parse_cayley, render_cayley};
use partgroup::morphisms::{compose, enumerate_partial_homs, HomBudget};
use partgroup::substructures::{is_partial_subgroup, PartialSubgroup};
use partgroup::theorems::{enumerate_instances, Instance};
use partgroup::{ElemSet, Freeness, GroupTable};

const NAMES: [&str; 9] = ["Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "D4", "Q8"];

fn instances() -> &'static [Instance] {
    use std::sync::OnceLock;
    static CELL: OnceLock<Vec<Instance>> = OnceLock::new();
    CELL.get_or_init(|| {
        let catalog: Vec<(String, Arc<GroupTable>)> = NAMES
            .iter()
            .map(|n| (n.to_string(), Arc::new(parse_catalog(n).unwrap())))
            .collect();
        enumerate_instances(&catalog, 8, 4, Freeness::Strict).unwrap()
    })
}

fn instance() -> impl Strategy<Value = &'static Instance> {
    (0..instances().len()).prop_map(|i| &instances()[i])
}

fn small_instance() -> impl Strategy<Value = &'static Instance> {
    let small: Vec<&'static Instance> = instances().iter().filter(|x| x.group.parent().order() <= 4).collect();
    proptest::sample::select(small)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn law_lands_in_support_and_associates(inst in instance(), i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let g = &inst.group;
        let c = g.carrier().to_vec();
        let (a, b, d) = (c[i % c.len()], c[j % c.len()], c[k % c.len()]);
        prop_assert!(g.support().contains(g.dot(a, b)));
        prop_assert_eq!(g.dot(g.dot(a, b), d), g.dot(a, g.dot(b, d)));
        let (x, y) = g.factorize(a).unwrap();
        prop_assert_eq!(g.parent().mul(x, y), a);
    }

    #[test]
    fn inverse_sets_solve_the_law(inst in instance(), i in 0usize..64) {
        let g = &inst.group;
        let c = g.carrier().to_vec();
        let a = c[i % c.len()];
        for b in g.inv_set(a).unwrap() {
            prop_assert!(g.contains(b));
            prop_assert_eq!(g.dot(a, b), g.identity());
            prop_assert_eq!(g.dot(b, a), g.identity());
        }
    }

    #[test]
    fn generated_sets_are_partial_subgroups(inst in instance(), bits in any::<u64>()) {
        let g = &inst.group;
        let s = ElemSet::from_bits(bits).intersection(g.carrier());
        let h = g.generated_partial_subgroup(s);
        prop_assert!(s.is_subset(h));
        prop_assert!(is_partial_subgroup(g, h).is_ok());
        let ps = PartialSubgroup::new(g, h).unwrap();
        prop_assert!(g.parent().product_set(ps.support(), ps.support()) == ps.support());
    }

    #[test]
    fn cayley_text_round_trips(idx in 0usize..NAMES.len()) {
        let g = parse_catalog(NAMES[idx]).unwrap();
        let text = render_cayley(&g);
        let back = parse_cayley(&text).unwrap();
        prop_assert!(back == g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn composites_of_homs_are_homs(a in small_instance(), b in small_instance(), i in 0usize..1000, j in 0usize..1000) {
        let (g1, g2) = (&a.group, &b.group);
        let fs = enumerate_partial_homs(g1, g2, HomBudget::default()).unwrap();
        let gs = enumerate_partial_homs(g2, g2, HomBudget::default()).unwrap();
        let f = &fs[i % fs.len()];
        let h = &gs[j % gs.len()];
        prop_assert!(compose(f, h).is_ok());
    }
}
