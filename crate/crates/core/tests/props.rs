//! Property tests over random small systems: both engines agree, reductions
//! recombine, and the S-polynomial identities hold.

use proptest::prelude::*;

use sigrb_core::gm::{buchberger_run, GmConfig};
use sigrb_core::rb::{rb_run, RbConfig, RewriteOrder};
use sigrb_core::signature::OrderKind;
use sigrb_core::verify::{bases_equal, verify_gb};
use sigrb_core::{normal_form_with_trace, spoly, Monomial, Polynomial, PrimeField, Ring, Term};

fn f7_ring(nvars: usize) -> Ring {
    let names = ["x", "y", "z", "t"][..nvars]
        .iter()
        .map(|s| s.to_string())
        .collect();
    Ring::new(PrimeField::new(7).unwrap(), names)
}

fn arb_poly(nvars: usize, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let term = (1u64..7, proptest::collection::vec(0u32..3, nvars))
        .prop_map(|(c, exps)| Term {
            coeff: c,
            mono: Monomial::new(exps),
        });
    proptest::collection::vec(term, 1..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(&PrimeField::new(7).unwrap(), terms)
    })
}

fn arb_system(nvars: usize) -> impl Strategy<Value = Vec<Polynomial>> {
    proptest::collection::vec(arb_poly(nvars, 3), 2..=3)
        .prop_filter("nonzero generators", |sys| sys.iter().all(|f| !f.is_zero()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn engines_agree_on_random_systems(sys in arb_system(3)) {
        let ring = f7_ring(3);
        let gm = buchberger_run(&ring, &sys, GmConfig::default()).unwrap();
        prop_assert!(verify_gb(&ring, &gm.basis));
        for (order, pc) in [
            (OrderKind::Pot, false),
            (OrderKind::LtPot, true),
            (OrderKind::PotRev, false),
        ] {
            let cfg = RbConfig {
                order,
                rewrite: RewriteOrder::Rat,
                update_syz: true,
                product_criterion: pc,
                prefilter: false,
                criteria_off: false,
            };
            let rb = rb_run(&ring, &sys, cfg).unwrap();
            prop_assert!(verify_gb(&ring, &rb.projected_basis()));
            prop_assert!(bases_equal(&ring, &gm.basis, &rb.projected_basis()));
        }
    }

    #[test]
    fn normal_form_trace_recombines(f in arb_poly(3, 6), sys in arb_system(3)) {
        let ring = f7_ring(3);
        let (nf, trace) = normal_form_with_trace(&ring.field, &f, &sys, false);
        let mut acc = nf.clone();
        for (b, gi) in &trace {
            acc = acc.add(&ring.field, &sys[*gi].mul_term(&ring.field, b));
        }
        prop_assert_eq!(acc, f);
        for t in nf.terms() {
            for g in &sys {
                prop_assert!(!g.lead_mono().unwrap().divides(&t.mono));
            }
        }
    }

    #[test]
    fn spoly_is_antisymmetric_up_to_scalar(
        f in arb_poly(3, 4),
        g in arb_poly(3, 4),
    ) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let field = PrimeField::new(7).unwrap();
        let fg = spoly(&field, &f, &g).unwrap();
        let gf = spoly(&field, &g, &f).unwrap();
        prop_assert_eq!(fg, gf.neg(&field));
        // both lead terms cancel: the S-polynomial is below the lcm
        let fg = spoly(&field, &f, &g).unwrap();
        if let Some(lt) = fg.lead_mono() {
            let lcm = f.lead_mono().unwrap().lcm(g.lead_mono().unwrap());
            prop_assert!(sigrb_core::cmp_grevlex(lt, &lcm) == std::cmp::Ordering::Less);
        }
    }
}
