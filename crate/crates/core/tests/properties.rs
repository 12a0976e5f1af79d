use aqtab_core::{
    build_quasitableau, build_signed_tableau, classify, dirac_constructive,
    dirac_feasibility_bruteforce, dirac_index_nonzero, is_antitableau, nonvanishing_nice,
    overlap_by_definition, overlap_by_formula, r_table, CriteriaError, LambdaParam, ParabolicDatum,
};
use proptest::prelude::*;

fn datum() -> impl Strategy<Value = ParabolicDatum> {
    prop::collection::vec((0usize..4, 0usize..4), 1..7)
        .prop_filter("no (0,0)", |v| v.iter().all(|&p| p != (0, 0)))
        .prop_map(|v| ParabolicDatum::new(v).unwrap())
}

/// A datum with a nice `lambda`: each gap at most `min{n_i, n_{i+1}}`.
fn nice_point() -> impl Strategy<Value = (ParabolicDatum, LambdaParam)> {
    datum()
        .prop_flat_map(|d| {
            let caps: Vec<i64> = (1..d.r())
                .map(|i| d.n_at(i).min(d.n_at(i + 1)) as i64)
                .collect();
            let gaps: Vec<_> = caps.iter().map(|&c| -10i64..=c).collect();
            (Just(d), gaps, -20i64..20)
        })
        .prop_map(|(d, gaps, start)| {
            let mut values = vec![start];
            for g in gaps {
                values.push(values[values.len() - 1] + g);
            }
            (d, LambdaParam::new(values))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn overlap_definition_matches_formula(d in datum()) {
        let t = build_signed_tableau(&d);
        for i in 1..d.r() {
            prop_assert_eq!(overlap_by_definition(&t, i), overlap_by_formula(&d, i));
        }
    }

    #[test]
    fn generated_points_are_nice((d, l) in nice_point()) {
        prop_assert!(classify(&d, &l).nice);
    }

    #[test]
    fn nonzero_modules_have_antitableaux((d, l) in nice_point()) {
        if nonvanishing_nice(&d, &l).unwrap().holds {
            prop_assert_eq!(is_antitableau(&build_quasitableau(&d, &l)), Ok(true));
        }
    }

    #[test]
    fn verdict_never_contradicts_itself((d, l) in nice_point()) {
        match dirac_index_nonzero(&d, &l) {
            Ok(v) => {
                let r_adj = r_table(&d, &l).adjacent();
                prop_assert_eq!(v.dirac_index_nonzero, Some(v.strengthened_hp));
                prop_assert_eq!(v.witness.is_some(), v.strengthened_hp);
                if let Some(w) = &v.witness {
                    prop_assert!(w.is_valid(&d, &r_adj));
                }
            }
            Err(CriteriaError::ModuleVanishes { pair }) => {
                prop_assert!(!nonvanishing_nice(&d, &l).unwrap().holds);
                prop_assert!(l.gap(pair) > overlap_by_formula(&d, pair).unwrap() as i64);
            }
            Err(other) => prop_assert!(false, "unexpected {other}"),
        }
    }

    #[test]
    fn constructive_and_search_agree((d, l) in nice_point()) {
        let built = dirac_constructive(&d, &l);
        match dirac_feasibility_bruteforce(&d, &l) {
            Ok(Some(found)) => {
                let r_adj = r_table(&d, &l).adjacent();
                prop_assert!(found.is_valid(&d, &r_adj));
                let built = built.expect("feasible point must be constructible");
                prop_assert!(built.is_valid(&d, &r_adj));
            }
            Ok(None) => {
                let precondition_failed = matches!(built, Err(CriteriaError::PreconditionViolated(_)));
                prop_assert!(precondition_failed);
            }
            Err(CriteriaError::PreconditionViolated(_)) => {
                let precondition_failed = matches!(built, Err(CriteriaError::PreconditionViolated(_)));
                prop_assert!(precondition_failed);
            }
            Err(other) => prop_assert!(false, "unexpected {other}"),
        }
    }

    #[test]
    fn shared_values_fit_in_both_blocks((d, l) in nice_point()) {
        let table = r_table(&d, &l);
        for (i, j, v) in table.entries() {
            prop_assert!(v <= d.n_at(i).min(d.n_at(j)));
        }
    }
}
