use std::path::PathBuf;

use braidcalc::crossprod::{braided_line, smash_bialgebra, z2_triangular};
use braidcalc::diffcalc::universal_first_order;
use braidcalc::gradedcalc::BraidedObject;
use braidcalc::hopf::builtin;
use braidcalc::io::*;
use braidcalc::{Error, Field, LinMap, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use serde::de::DeserializeOwned;
use serde::Serialize;

const BUILTINS: &[&str] = &[
    "trivial",
    "cyclic:2",
    "cyclic:3",
    "symmetric:3",
    "function-cyclic:3",
    "function-symmetric:3",
    "sweedler",
    "taft:3",
];

fn data_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn loader() -> Loader {
    Loader::new(data_dir(), Field::rationals())
}

fn reserialize<T: Serialize + DeserializeOwned>(text: &str) -> String {
    let v: T = serde_json::from_str(text).unwrap();
    to_json(&v)
}

#[test]
fn builtin_algebras_round_trip() {
    for name in BUILTINS {
        let h = builtin(name).unwrap();
        let text = to_json(&AlgebraFile::from_algebra(&h));
        let parsed: AlgebraFile = serde_json::from_str(&text).unwrap();
        let back = parsed.build(&Field::rationals()).unwrap();
        assert_eq!(back, h, "{name}");
        assert!(back.report().passed(), "{name}");
        assert_eq!(to_json(&AlgebraFile::from_algebra(&back)), text, "{name}");
    }
}

#[test]
fn extension_scalars_serialize_as_coordinate_lists() {
    let h = builtin("taft:3").unwrap();
    let file = AlgebraFile::from_algebra(&h);
    assert!(matches!(file.field, Some(braidcalc::FieldSpec::Extension { .. })));
    assert!(file.m.iter().chain(&file.delta).all(|(_, _, s)| s.starts_with('[')));
}

#[test]
fn triples_are_sorted() {
    for name in BUILTINS {
        let h = builtin(name).unwrap();
        let t = to_triples(h.delta(), h.field());
        let keys: Vec<_> = t.iter().map(|(r, c, _)| (*r, *c)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted, "{name}");
    }
}

#[test]
fn data_files_are_canonical() {
    let mut seen = 0;
    for entry in std::fs::read_dir(data_dir()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let file = path.file_name().unwrap().to_str().unwrap().to_string();
        let again = if file.ends_with(".yd.json") {
            reserialize::<YdFile>(&text)
        } else if file.ends_with(".bimodule.json") {
            reserialize::<BimoduleFile>(&text)
        } else if file.ends_with(".braided.json") || file.starts_with("qplane") {
            reserialize::<BraidedFile>(&text)
        } else if file.ends_with(".object.json") {
            reserialize::<ObjectFile>(&text)
        } else if file.ends_with(".qt.json") {
            reserialize::<QtFile>(&text)
        } else if file.ends_with(".inner.json") {
            reserialize::<InnerQtFile>(&text)
        } else if file.ends_with(".projection.json") {
            reserialize::<ProjectionFile>(&text)
        } else if file.ends_with(".calculus.json") {
            reserialize::<CalculusFile>(&text)
        } else {
            reserialize::<AlgebraFile>(&text)
        };
        assert_eq!(again, text, "{file}");
        seen += 1;
    }
    assert!(seen >= 10);
}

#[test]
fn data_files_match_constructions() {
    let l = loader();
    let (q, _) = l.braided(&Ref::Name("qplane-q2.json".into())).unwrap();
    assert_eq!(q, BraidedObject::quantum_plane(&Scalar::from_int(2)).unwrap());

    let (h, line) = braided_line();
    let (h2, obj) = l.object(&Ref::Name("braided-line.object.json".into())).unwrap();
    assert_eq!(h2, h);
    assert_eq!(obj, line);

    let (via_yd, _) = l.braided(&Ref::Name("braided-line.braided.json".into())).unwrap();
    assert_eq!(via_yd, BraidedObject::from_yd(&h, &line.yd()).unwrap());

    let smash = l.algebra(&Ref::Name("kz2-braided-line.json".into())).unwrap();
    assert_eq!(smash, smash_bialgebra(&h, &line).unwrap());

    let qt = l.qt(&Ref::Name("z2-triangular.qt.json".into())).unwrap();
    assert_eq!(qt.r, z2_triangular().r);

    let c = l.calculus(&Ref::Name("kz3-universal.calculus.json".into())).unwrap();
    assert_eq!(c.x.dim, 6);
}

#[test]
fn corrupted_algebra_loads_but_fails() {
    let h = loader().algebra(&Ref::Name("corrupted.json".into())).unwrap();
    let r = h.report();
    assert!(!r.passed());
    assert!(r.failures().any(|c| c.witness.is_some()));
}

#[test]
fn structures_round_trip_through_files() {
    let (h, line) = braided_line();
    let l = Loader::new(".", Field::rationals());

    let text = to_json(&ObjectFile::from_object(&h, &line));
    let (h2, back) = l.object(&Ref::inline(serde_json::from_str::<ObjectFile>(&text).unwrap())).unwrap();
    assert_eq!((h2, back), (h.clone(), line.clone()));

    let y = line.yd();
    let text = to_json(&YdFile::from_module(&h, &y));
    let (_, back) = l.yd(&Ref::inline(serde_json::from_str(&text).unwrap())).unwrap();
    assert_eq!(back, y);

    let c = universal_first_order(&h).unwrap();
    let file = CalculusFile::from_calculus(&c);
    let text = to_json(&file);
    let back = l.calculus(&Ref::inline(serde_json::from_str(&text).unwrap())).unwrap();
    assert_eq!(back.d, c.d);
    assert_eq!(back.x, c.x);
    assert_eq!(to_json(&CalculusFile::from_calculus(&back)), text);

    let q = z2_triangular();
    let text = to_json(&QtFile::from_qt(&q));
    let back = l.qt(&Ref::inline(serde_json::from_str(&text).unwrap())).unwrap();
    assert_eq!((back.a, back.delta_bar, back.r), (q.a, q.delta_bar, q.r));
}

#[test]
fn malformed_inputs_are_parse_errors() {
    let f = Field::rationals();
    let t: Triples = vec![(2, 0, "1".into())];
    assert!(matches!(from_triples(&t, 2, 2, &f, "m"), Err(Error::Parse(_))));
    let t: Triples = vec![(0, 0, "1/0".into())];
    assert!(matches!(from_triples(&t, 2, 2, &f, "m"), Err(Error::Parse(_))));
    let t: Triples = vec![(0, 0, "x".into())];
    assert!(matches!(from_triples(&t, 2, 2, &f, "m"), Err(Error::Parse(_))));

    let bad = r#"{"dim": 1, "m": [], "eta": [], "delta": [], "eps": [], "colour": "red"}"#;
    assert!(serde_json::from_str::<AlgebraFile>(bad).is_err());

    let l = loader();
    assert!(matches!(l.algebra(&Ref::Name("builtin:nonsense".into())), Err(Error::Parse(_))));
    assert!(matches!(l.algebra(&Ref::Name("missing.json".into())), Err(Error::Parse(_))));
    // a braiding of the wrong size for its dimension
    let file = BraidedFile::Explicit { dim: 2, braiding: vec![(5, 5, "1".into())] };
    assert!(matches!(l.braided(&Ref::inline(file)), Err(Error::Parse(_))));
}

#[test]
fn default_field_applies_to_files_without_one() {
    let h = builtin("cyclic:2").unwrap();
    let mut file = AlgebraFile::from_algebra(&h);
    file.field = None;
    let q3 = Field::cyclotomic(3).unwrap();
    let back = file.build(&q3).unwrap();
    assert_eq!(back.field(), &q3);
    assert!(back.report().passed());
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| Scalar::from(BigRational::new(BigInt::from(n), BigInt::from(d))))
}

proptest! {
    #[test]
    fn triples_round_trip(
        cod in 1usize..5,
        dom in 1usize..5,
        entries in prop::collection::vec((0usize..5, 0usize..5, rational()), 0..12),
    ) {
        let entries: Vec<_> = entries.into_iter().map(|(r, c, v)| (r % cod, c % dom, v)).collect();
        let m = LinMap::from_triples(cod, dom, entries).unwrap();
        let f = Field::rationals();
        let t = to_triples(&m, &f);
        prop_assert_eq!(from_triples(&t, cod, dom, &f, "m").unwrap(), m.clone());
        prop_assert_eq!(t.len(), m.nnz());
    }

    #[test]
    fn extension_triples_round_trip(coeffs in prop::collection::vec((-5i64..5, 1i64..4), 2)) {
        let f = Field::cyclotomic(3).unwrap();
        let c = coeffs.iter().map(|(n, d)| BigRational::new(BigInt::from(*n), BigInt::from(*d))).collect();
        let x = f.element(c).unwrap();
        let m = LinMap::from_triples(1, 1, [(0, 0, x)]).unwrap();
        let t = to_triples(&m, &f);
        prop_assert_eq!(from_triples(&t, 1, 1, &f, "x").unwrap(), m);
    }
}
