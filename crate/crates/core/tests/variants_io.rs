mod common;

use std::collections::BTreeMap;

use num_rational::BigRational;

use polyexact::constructors::{build, pseudo_rco, rco, SolidName};
use polyexact::exactfield::{Point3, QuadRat};
use polyexact::io::{decode, encode, format_significant, to_obj};
use polyexact::polymodel::{validate, Polyhedron};
use polyexact::variants::{skeleton, star, FrameParams, StarParams};
use polyexact::Error;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[test]
fn star_cube_apex() {
    let cube = build(SolidName::Cube).unwrap();
    let s = star(&cube, &StarParams::new(BTreeMap::from([(4, q(1, 4))]))).unwrap();
    assert!(s.vertices().contains(&Point3::ints(0, 0, 3, 1)));
    let r = validate(&s);
    assert_eq!((r.v_count, r.e_count, r.f_count, r.euler), (14, 36, 24, 2));
    assert!(matches!(
        star(&cube, &StarParams::new(BTreeMap::from([(4, q(0, 1))]))),
        Err(Error::DegenerateApex(4))
    ));
    assert!(matches!(
        star(&rco().unwrap(), &StarParams::new(BTreeMap::from([(4, q(1, 4))]))),
        Err(Error::Parameter(_))
    ));
}

#[test]
fn star_counts_for_rco_family() {
    for p in [rco().unwrap(), pseudo_rco().unwrap()] {
        for params in [StarParams::equilateral(&p), StarParams::uniform(&p, q(1, 3))] {
            let s = star(&p, &params).unwrap();
            let r = validate(&s);
            assert!(r.is_valid(), "{:?}", r.defects);
            assert_eq!((r.v_count, r.e_count, r.f_count, r.euler), (50, 144, 96, 2));
            assert_eq!(s.d(), p.d());
        }
    }
}

#[test]
fn star_preserves_euler_on_catalog() {
    for name in SolidName::ALL {
        let p = build(name).unwrap();
        let s = star(&p, &StarParams::uniform(&p, q(1, 5))).unwrap();
        let r = validate(&s);
        assert!(r.is_valid() && r.euler == 2, "{name}");
        let sum_n: usize = p.faces().iter().map(Vec::len).sum();
        assert_eq!(r.v_count, p.vertex_count() + p.face_count());
        assert_eq!(r.e_count, p.edge_count() + sum_n);
        assert_eq!(r.f_count, sum_n);
    }
}

#[test]
fn skeleton_components() {
    let r = rco().unwrap();
    let frame = FrameParams::default();
    let m = skeleton(&r, &frame).unwrap();
    assert_eq!(m.components.len(), 26);
    let fin = skeleton(&star(&r, &StarParams::equilateral(&r)).unwrap(), &frame).unwrap();
    let pseudo = pseudo_rco().unwrap();
    let fin_q = skeleton(&star(&pseudo, &StarParams::equilateral(&pseudo)).unwrap(), &frame).unwrap();
    for mesh in [&m, &fin, &fin_q] {
        for c in &mesh.components {
            assert_eq!(c.euler_characteristic(), 0, "{}", c.name);
            assert!(c.is_closed_oriented(), "{}", c.name);
            assert!(c.signed_volume() > 0.0, "{}", c.name);
        }
    }
    assert_eq!(fin.components.len(), 96);
    assert_eq!(fin_q.components.len(), 96);
    let square = m.components.iter().find(|c| c.vertices.len() == 16).unwrap();
    assert_eq!(square.triangles.len(), 32);
    assert!(FrameParams::new(q(3, 5), 0.1).is_err());
    assert!(FrameParams::new(q(1, 4), 0.0).is_err());
}

#[test]
fn json_round_trip_over_catalog() {
    for name in SolidName::ALL {
        let p = build(name).unwrap();
        let bytes = encode(&p).unwrap();
        assert_eq!(decode(&bytes).unwrap(), p, "{name}");
        // encoding is deterministic
        assert_eq!(encode(&p).unwrap(), bytes);
        let s = star(&p, &StarParams::uniform(&p, q(1, 4))).unwrap();
        assert_eq!(decode(&encode(&s).unwrap()).unwrap(), s, "star {name}");
    }
}

#[test]
fn invalid_polyhedron_is_not_encoded() {
    let cube = build(SolidName::Cube).unwrap();
    let broken = Polyhedron::new(cube.vertices().to_vec(), cube.faces()[1..].to_vec(), false).unwrap();
    assert!(encode(&broken).is_err());
}

#[test]
fn obj_output() {
    let r = rco().unwrap();
    let text = String::from_utf8(to_obj(&r, 15).unwrap()).unwrap();
    assert!(text.lines().any(|l| l == "v 1 1 2.41421356237310"));
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 24);
    assert_eq!(text.lines().filter(|l| l.starts_with("f ")).count(), 26);

    let mesh = skeleton(&r, &FrameParams::default()).unwrap();
    let a = to_obj(&mesh, 9).unwrap();
    assert_eq!(a, to_obj(&mesh, 9).unwrap());
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("g ")).count(), 26);
    assert!(text.contains("\ng face_0\n") && text.contains("\ng face_25\n"));
    // every index refers to an emitted vertex
    let nv = text.lines().filter(|l| l.starts_with("v ")).count();
    for l in text.lines().filter(|l| l.starts_with("f ")) {
        for i in l.split_whitespace().skip(1) {
            let i: usize = i.parse().unwrap();
            assert!((1..=nv).contains(&i));
        }
    }
}

#[test]
fn obj_coordinates_are_correctly_rounded() {
    // At 17 digits the printed decimal parses to within one ulp of the
    // 256-bit reference; the direct conversion is checked the same way.
    for name in SolidName::ALL {
        let p = build(name).unwrap();
        for v in p.vertices() {
            for c in v.coords() {
                let printed: f64 = format_significant(c, 17).parse().unwrap();
                assert!(common::within_one_ulp(c, printed), "{name}: {c}");
                assert!(common::within_one_ulp(c, c.to_f64()), "{name}: {c}");
            }
        }
    }
    let x = QuadRat::from_parts(1, 1, 1, 1, 2).unwrap();
    assert_eq!(format_significant(&x, 15), "2.41421356237310");
}
