use ga_cli::{parse_expr, parse_statement, tokenize, Environment};
use ga_core::{BladeIndex, Multivector, Signature};
use proptest::prelude::*;

fn coef() -> impl Strategy<Value = f64> {
    prop_oneof![
        -1e3..1e3f64,
        (-9i32..=9).prop_map(f64::from),
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
    ]
}

fn printable(sig: Signature) -> impl Strategy<Value = Multivector> {
    prop::collection::btree_map(0..sig.blade_count() as u16, coef(), 0..8).prop_map(move |terms| {
        Multivector::from_terms(sig, terms.into_iter().map(|(b, c)| (BladeIndex::from_bits(b), c))).unwrap()
    })
}

proptest! {
    #[test]
    fn printed_values_parse_back_exactly(v in printable(Signature::new(3, 2).unwrap())) {
        let text = v.to_string();
        let back = Environment::new(v.sig()).evaluate(&parse_expr(&text).unwrap()).unwrap();
        prop_assert_eq!(back, v, "{}", text);
    }

    #[test]
    fn parser_is_total(s in "\\PC{0,40}") {
        // any outcome is fine as long as it is a value or a spanned error
        if let Err(e) = tokenize(&s) {
            prop_assert!(e.span().end <= s.len());
        }
        let _ = parse_statement(&s);
    }

    #[test]
    fn display_of_ast_reparses_to_same_tree(a in 0usize..4, b in 0usize..4, c in 0usize..4) {
        let ops = ["+", "*", "^", "."];
        let src = format!("x {} y {} z~ {} -w", ops[a], ops[b], ops[c]);
        let tree = parse_expr(&src).unwrap();
        prop_assert_eq!(parse_expr(&tree.to_string()).unwrap(), tree);
    }
}
