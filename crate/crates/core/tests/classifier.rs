use std::collections::BTreeSet;

use cyclic_aut::classifier::*;
use cyclic_aut::curve::{canonical_triple, parse_curve, CyclicCover};
use cyclic_aut::fuchsian::{cb_extendable, SkepSpec};
use cyclic_aut::grouptheory::{coset_enumerate, fingerprint_presentation, DEFAULT_MAX_COSETS};
use cyclic_aut::numtheory::{gcd, gcd_many, is_prime, units};
use cyclic_aut::Error;

/// All admissible triples for `n`, one per ordered triple.
fn triples(n: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a in 1..n {
        for b in 1..n {
            let c = (2 * n - a - b) % n;
            if c != 0 && gcd_many(&[n, a, b, c]).unwrap() == 1 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn belyi(n: u64, t: [u64; 3]) -> ClassificationReport {
    classify_belyi(n, t[0], t[1], t[2]).unwrap_or_else(|e| panic!("({n}; {t:?}): {e}"))
}

#[test]
fn table_examples() {
    let r = belyi(7, [1, 2, 4]);
    assert_eq!((r.row.as_str(), r.order(), r.genus), ("C.2", 168, 3));
    assert_eq!(r.group.structure.to_string(), "PSL(2,7)");

    let r = belyi(12, [1, 3, 8]);
    assert_eq!((r.row.as_str(), r.order(), r.genus), ("D.1", 48, 3));
    assert_eq!(r.group.structure, GroupStructure::CentralExtension { center: 4, quotient: "A4".into() });

    let r = belyi(9, [2, 2, 5]);
    assert_eq!(r.canonical_triple, Some([1, 1, 7]));
    assert_eq!((r.row.as_str(), r.order(), r.genus), ("A.1", 18, 4));
    assert_eq!(r.group.structure, GroupStructure::Cyclic(18));

    let r = belyi(11, [2, 3, 6]);
    assert_eq!((r.row.as_str(), r.order()), ("DEFAULT", 11));

    let r = belyi(6, [1, 2, 3]);
    assert_eq!((r.row.as_str(), r.order()), ("DEFAULT", 6));
}

#[test]
fn every_row_tag_appears_with_its_order() {
    let expect = [
        ("A.1", 5, [1, 1, 3], 10),
        ("A.2", 10, [1, 1, 8], 40),
        ("B.1", 15, [1, 4, 10], 30),
        ("B.2", 16, [1, 6, 9], 64),
        ("B.3", 8, [1, 2, 5], 96),
        ("C.1", 13, [1, 3, 9], 39),
        ("C.2", 7, [1, 2, 4], 168),
        ("D.1", 12, [1, 3, 8], 48),
        ("E.1", 8, [1, 3, 4], 48),
        ("E.2", 12, [1, 4, 7], 72),
        ("E.3", 24, [1, 4, 19], 144),
    ];
    for (row, n, t, order) in expect {
        let r = belyi(n, t);
        assert_eq!(r.row, row, "({n}; {t:?})");
        assert_eq!(r.order(), order, "({n}; {t:?})");
    }
}

#[test]
fn rejects_bad_input() {
    assert!(matches!(classify_belyi(3, 1, 1, 1), Err(Error::Domain(_))));
    assert!(matches!(classify_belyi(7, 1, 2, 3), Err(Error::Domain(_))));
    assert!(matches!(classify_belyi(6, 2, 2, 2), Err(Error::Domain(_))));
    assert!(matches!(classify_belyi(7, 0, 3, 4), Err(Error::Domain(_))));
}

/// Sweep over all admissible triples for 4 <= n <= 30.
#[test]
fn sweep_invariants() {
    for n in 4..=30u64 {
        let mut by_class: std::collections::BTreeMap<[u64; 3], ClassificationReport> = Default::default();
        for t in triples(n) {
            let r = belyi(n, t);
            let canon = r.canonical_triple.unwrap();
            assert_eq!(canon, canonical_triple(n, t[0], t[1], t[2]).unwrap());
            let cover = CyclicCover::belyi(n, t[0], t[1], t[2]).unwrap();
            assert_eq!(r.genus, cover.genus().unwrap());
            assert!(r.order_law_holds());

            // equivalence invariance: same row, order, structure across the class
            match by_class.get(&canon) {
                Some(first) => {
                    assert_eq!((&first.row, first.order(), &first.group.structure), (&r.row, r.order(), &r.group.structure));
                }
                None => {
                    by_class.insert(canon, r.clone());
                }
            }

            if r.genus >= 2 {
                assert!(r.order() <= 84 * (r.genus - 1), "({n}; {t:?})");
                assert_eq!(r.order() == 84 * (r.genus - 1), canon == [1, 2, 4] && n == 7);
                assert!(r.chain_is_table_valid(), "({n}; {t:?}) {:?}", r.chain);
            }

            let verdict = cb_extendable(&SkepSpec::from_images(n, &t).unwrap());
            if r.row == "DEFAULT" {
                assert!(!verdict.is_extendable(), "({n}; {t:?}) {verdict}");
                assert_eq!(r.order(), n);
            } else if r.genus >= 2 {
                assert!(verdict.is_extendable(), "({n}; {t:?})");
            }

            // no exponent a unit => cyclic
            if t.iter().all(|&k| gcd(n, k) != 1) {
                assert_eq!(r.group.structure, GroupStructure::Cyclic(n));
            }
            // all exponents units => n odd, genus (n-1)/2
            if t.iter().all(|&k| gcd(n, k) == 1) {
                assert_eq!(n % 2, 1);
                assert_eq!(r.genus, (n - 1) / 2);
            }
        }
    }
}

#[test]
fn scaling_invariance() {
    for n in [9u64, 12, 15, 16, 21, 24] {
        for t in triples(n) {
            let r = belyi(n, t);
            for l in units(n) {
                let s = t.map(|k| k * l % n);
                let q = belyi(n, s);
                assert_eq!((&q.row, q.order(), &q.group.structure), (&r.row, r.order(), &r.group.structure));
            }
        }
    }
}

#[test]
fn presentations_match_orders() {
    for n in 4..=30u64 {
        let mut seen = BTreeSet::new();
        for t in triples(n) {
            let r = belyi(n, t);
            if !seen.insert(r.canonical_triple) {
                continue;
            }
            if let Some(p) = presentation_for(&r) {
                assert_eq!(coset_enumerate(&p, DEFAULT_MAX_COSETS).unwrap(), r.order(), "{} ({n}; {t:?})", r.row);
            }
        }
    }
    for row in ["B.3", "C.2", "D.1", "E.1", "E.2", "E.3"] {
        let r = [(8, [1, 2, 5]), (7, [1, 2, 4]), (12, [1, 3, 8]), (8, [1, 3, 4]), (12, [1, 4, 7]), (24, [1, 4, 19])]
            .into_iter()
            .map(|(n, t)| belyi(n, t))
            .find(|r| r.row == row)
            .unwrap();
        assert!(presentation_for(&r).is_none());
    }
}

#[test]
fn printed_presentations() {
    let accola = presentation_for(&belyi(10, [1, 1, 8])).unwrap();
    assert_eq!(accola.to_string(), "<u,v | u^4, v^10, (u*v)^2, u^-2*v^-1*u^2*v>");
    let kulkarni = presentation_for(&belyi(16, [1, 6, 9])).unwrap();
    assert_eq!(kulkarni.to_string(), "<u,v | u^4, v^16, (u*v)^2, u^2*v*u^2*v^7>");
    let f = fingerprint_presentation(&kulkarni, DEFAULT_MAX_COSETS).unwrap();
    assert!(!f.is_abelian);
    let twisted = presentation_for(&belyi(15, [1, 4, 10])).unwrap();
    assert_eq!(twisted.to_string(), "<u,v | u^2, v^15, u*v*u*v^-4>");
}

#[test]
fn lefschetz_examples() {
    let r = classify_lefschetz(5, 1).unwrap();
    assert_eq!(r.group.structure, GroupStructure::Cyclic(10));
    let r = classify_lefschetz(7, 2).unwrap();
    assert_eq!((r.order(), r.group.structure.to_string().as_str()), (168, "PSL(2,7)"));
    let r = classify_lefschetz(13, 3).unwrap();
    assert_eq!(r.order(), 39);
    assert!(matches!(r.group.structure, GroupStructure::CyclicSemidirectC3 { n: 13, .. }));
    let f = fingerprint_presentation(&presentation_for(&r).unwrap(), 1000).unwrap();
    assert_eq!(f.order, 39);
    assert!(!f.is_abelian);
    assert_eq!(classify_lefschetz(11, 2).unwrap().group.structure, GroupStructure::Cyclic(11));
    assert!(classify_lefschetz(9, 2).is_err());
    assert!(classify_lefschetz(3, 1).is_err());
    assert!(classify_lefschetz(7, 6).is_err());
}

#[test]
fn lefschetz_canonical_examples() {
    assert_eq!(lefschetz_canonical(7, 5).unwrap(), 1);
    assert_eq!(lefschetz_canonical(7, 3).unwrap(), 1);
    assert_eq!(lefschetz_canonical(13, 3).unwrap(), 3);
    for p in (5..100).filter(|&p| is_prime(p)) {
        for a in 1..=p - 2 {
            let c = lefschetz_canonical(p, a).unwrap();
            assert!((1..(p - 1) / 2).contains(&c) || (p == 5 && c == 1));
            assert_eq!(lefschetz_canonical(p, c).unwrap(), c);
            // the canonical curve is birational to the original: same triple class
            assert_eq!(
                canonical_triple(p, 1, a, p - 1 - a).unwrap(),
                canonical_triple(p, 1, c, p - 1 - c).unwrap()
            );
        }
    }
}

#[test]
fn lefschetz_isomorphism_is_triple_equivalence() {
    assert!(lefschetz_isomorphic(11, 2, 4).unwrap());
    assert!(!lefschetz_isomorphic(7, 1, 2).unwrap());
    for p in (5..100).filter(|&p| is_prime(p)) {
        let range: Vec<u64> = (1..(p - 1) / 2).collect();
        for &a in &range {
            assert!(lefschetz_isomorphic(p, a, a).unwrap());
            for &b in &range {
                let iso = lefschetz_isomorphic(p, a, b).unwrap();
                assert_eq!(iso, lefschetz_isomorphic(p, b, a).unwrap());
                let ta = canonical_triple(p, 1, a, p - 1 - a).unwrap();
                let tb = canonical_triple(p, 1, b, p - 1 - b).unwrap();
                assert_eq!(iso, ta == tb, "p={p} a={a} b={b}");
                for &c in &range {
                    if iso && lefschetz_isomorphic(p, b, c).unwrap() {
                        assert!(lefschetz_isomorphic(p, a, c).unwrap());
                    }
                }
            }
        }
    }
}

#[test]
fn prime_degree_consistency() {
    for p in (5..=97).filter(|&p| is_prime(p)) {
        for a in 1..=p - 2 {
            let l = classify_lefschetz(p, a).unwrap();
            let b = belyi(p, [a, 1, p - 1 - a]);
            assert_eq!((l.order(), &l.group.structure), (b.order(), &b.group.structure), "p={p} a={a}");
            assert_eq!(l.genus, b.genus);
            assert_eq!(l.canonical_triple, b.canonical_triple);
        }
    }
}

#[test]
fn fermat_instances() {
    let cases = [
        (4, 4, 96, "(Z4+Z4) x| S3"),
        (5, 4, 20, "Z4+Z5"),
        (8, 4, 64, "(central Z4).D16"),
        (6, 2, 24, "(Z2+Z6) x| Z2"),
        (7, 2, 14, "Z14"),
        (6, 3, 36, "(Z3+Z6) x| Z2"),
        (4, 3, 48, "(central Z4).A4"),
    ];
    for (n, d, order, tag) in cases {
        let r = classify_fermat(n, d).unwrap();
        assert_eq!(r.order(), order, "({n},{d})");
        assert_eq!(r.group.structure.to_string(), tag);
        assert!(r.order_law_holds());
        if let Some(p) = presentation_for(&r) {
            assert_eq!(coset_enumerate(&p, DEFAULT_MAX_COSETS).unwrap(), order, "({n},{d})");
        }
    }
    assert_eq!(
        presentation_for(&classify_fermat(8, 4).unwrap()).unwrap().to_string(),
        "<s,t,u | s^4, t^8, u^2, s^-1*t^-1*s*t, s^-1*u^-1*s*u, u*t*u*t*s>"
    );
}

#[test]
fn fermat_family_presentations() {
    for n in 2..=16u64 {
        for d in 2..=n {
            let Ok(r) = classify_fermat(n, d) else {
                assert!(CyclicCover::fermat(n, d).unwrap().genus().unwrap() < 2);
                continue;
            };
            assert!(r.order() <= 84 * (r.genus - 1), "({n},{d})");
            assert!(r.chain_is_table_valid(), "({n},{d}) {:?}", r.chain);
            if let Some(p) = presentation_for(&r) {
                assert_eq!(coset_enumerate(&p, DEFAULT_MAX_COSETS).unwrap(), r.order(), "({n},{d})");
            }
        }
    }
    match classify_fermat(3, 2) {
        Err(Error::Domain(m)) => assert!(m.contains("below hyperbolic range")),
        other => panic!("{other:?}"),
    }
    assert!(classify_fermat(4, 5).is_err());
}

#[test]
fn dihedral_and_stability() {
    assert!(dihedral_four_branch(6, [1, 1, 2, 2]).unwrap());
    assert!(dihedral_four_branch(6, [1, 5, 2, 4]).unwrap());
    assert!(!dihedral_four_branch(8, [1, 1, 2, 4]).unwrap());
    assert!(dihedral_four_branch(7, [1, 1, 2, 3]).unwrap());
    assert!(dihedral_four_branch(7, [1, 1, 2, 2]).is_err());
    // agrees with the four-point extension criterion
    for n in 2..=20u64 {
        for k1 in 1..n {
            for k2 in 1..n {
                for k3 in 1..n {
                    let k4 = (3 * n - k1 - k2 - k3) % n;
                    let k = [k1, k2, k3, k4];
                    if k4 == 0 || gcd_many(&[n, k1, k2, k3, k4]).unwrap() != 1 {
                        continue;
                    }
                    let v = cb_extendable(&SkepSpec::from_images(n, &k).unwrap());
                    let case2 = v.find(2).is_some();
                    let d = dihedral_four_branch(n, k).unwrap();
                    let periods_pair = {
                        let p = k.map(|x| n / gcd(n, x));
                        let mut s = p;
                        s.sort();
                        s[0] == s[1] && s[2] == s[3] && s[0] + s[2] >= 5
                    };
                    assert_eq!(case2, periods_pair);
                    if case2 {
                        assert!(d);
                    }
                }
            }
        }
    }
    assert!(stability_normal(3, 7).unwrap());
    assert!(!stability_normal(5, 10).unwrap());
    assert!(stability_normal(2, 5).unwrap());
    assert!(stability_normal(4, 9).is_err());
}

#[test]
fn classify_parsed_curves() {
    let r = classify_cover(&parse_curve("y^7 = x(x-1)^2(x+1)^4").unwrap()).unwrap();
    assert_eq!(r.row, "C.2");
    // three branch points anywhere, infinity included
    let r = classify_cover(&parse_curve("y^7 = x(x-1)^2").unwrap()).unwrap();
    assert_eq!(r.order(), 168);
    let r = classify_cover(&parse_curve("y^4 + x^4 = 1").unwrap()).unwrap();
    assert_eq!((r.row.as_str(), r.order()), ("FERMAT.1", 96));
    assert!(classify_cover(&parse_curve("y^5 = x(x-1)(x+1)(x-2)(x-3)").unwrap()).is_err());
}

#[test]
fn report_json_shape() {
    let r = belyi(7, [1, 2, 4]);
    let v = serde_json::to_value(&r).unwrap();
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(
        keys,
        ["input", "canonical_triple", "genus", "signature", "row", "order", "structure", "chain", "base_order"]
    );
    assert_eq!(v["signature"], "(7,7,7)");
    assert_eq!(v["structure"], "PSL(2,7)");
    assert_eq!(v["chain"][1]["via_row"], "1");
    assert_eq!(v["chain"][2]["index"], 8);
    let back: ClassificationReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);

    let k = belyi(16, [1, 6, 9]);
    let back: ClassificationReport = serde_json::from_str(&serde_json::to_string(&k).unwrap()).unwrap();
    assert_eq!(back, k);
}
