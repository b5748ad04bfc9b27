//! Worked examples: corners, partitions, coefficients and pairings.

use num_bigint::BigInt;
use scarf_core::fixtures;
use scarf_core::{
    check_complex, check_generic_exactness, check_minimal, outer_corners, parse_ideal,
    ExponentVector, Permutation, Resolution, SigmaReport, Staircase,
};

fn ev<const N: usize>(a: [u32; N]) -> ExponentVector {
    ExponentVector::from(a)
}

fn sigma(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn face<'a>(r: &'a SigmaReport, label: &ExponentVector) -> &'a scarf_core::FaceReport {
    r.faces.iter().find(|f| &f.label == label).unwrap()
}

#[test]
fn genex_cuboids_for_identity() {
    let res = Resolution::scarf(&fixtures::genex()).unwrap();
    let scarf = res.scarf_complex().unwrap();
    let id = Permutation::identity(3);
    let mut boxes: Vec<String> = scarf
        .top_faces()
        .iter()
        .map(|f| {
            scarf_core::partition_cuboid(scarf, &id, f)
                .unwrap()
                .to_string()
        })
        .collect();
    boxes.sort();
    let mut expected = vec![
        "]0,3]x]0,1]x]0,3]",
        "]0,2]x]1,4]x]0,1]",
        "]0,2]x]1,3]x]1,2]",
        "]0,2]x]1,2]x]2,3]",
        "]0,1]x]2,3]x]2,3]",
    ];
    expected.sort();
    assert_eq!(boxes, expected);
}

#[test]
fn amsterdam_hull() {
    let x = fixtures::amsterdam_hull().unwrap();
    let res = Resolution::from_complex(x).unwrap();
    assert_eq!(res.complex().cells[2].len(), 2);
    assert!(check_complex(res.differentials()));
    assert!(check_minimal(res.differentials()));
    assert!(check_generic_exactness(res.differentials(), 3, 3).exact);
    let full = res.verify_all().unwrap();
    for r in &full.sigmas {
        assert!(r.theorem_holds, "{}", r.sigma);
        assert_eq!(r.pairing, BigInt::from(5));
        let big = face(r, &ev([2, 2, 1])).contribution.clone();
        let small = face(r, &ev([1, 1, 2])).contribution.clone();
        if r.sigma.apply(0) == 2 {
            assert_eq!((big, small), (BigInt::from(3), BigInt::from(2)));
        } else {
            assert_eq!((big, small), (BigInt::from(4), BigInt::from(1)));
        }
    }
    assert!(full.factorization.holds);
}

#[test]
fn amsterdam_partition_shapes() {
    let st = Staircase::new(&fixtures::amsterdam()).unwrap();
    let p = st.partition(&sigma("3,1,2")).unwrap();
    let piece = p.part(&ev([2, 2, 1])).unwrap();
    assert_eq!(piece.cells.len(), 3);
    assert!(piece.cells.as_cuboid().is_none());
    let p = st.partition(&sigma("1,2,3")).unwrap();
    assert!(p.part(&ev([2, 2, 1])).unwrap().cells.as_cuboid().is_some());
}

#[test]
fn amsterdam_genericity_witness() {
    let m = parse_ideal(fixtures::AMSTERDAM_SWAPPED).unwrap();
    let w = m.genericity_witness().unwrap();
    assert_eq!(w.generators, (ev([1, 0, 1]), ev([1, 1, 0])));
    assert_eq!(w.variable, 0);
    assert_eq!(
        outer_corners(&fixtures::amsterdam()).unwrap(),
        vec![ev([1, 1, 2]), ev([2, 2, 1])]
    );
}

#[test]
fn motex_hull() {
    let res = Resolution::from_complex(fixtures::motex_hull().unwrap()).unwrap();
    assert!(check_complex(res.differentials()));
    assert!(!check_minimal(res.differentials()));
    let full = res.verify_all().unwrap();
    let beta = ev([2, 2, 1]);
    for r in &full.sigmas {
        assert_eq!(r.pairing, BigInt::from(9), "{}", r.sigma);
        assert!(r.residual_empty);
        let b = &face(r, &beta).contribution;
        let s = r.sigma.to_string();
        if s == "(3,1,2)" || s == "(3,2,1)" {
            assert_eq!(*b, BigInt::from(1));
            assert!(!r.theorem_holds);
        } else {
            assert_eq!(*b, BigInt::from(0));
            assert!(r.theorem_holds, "{s}");
        }
    }
    let r = res.verify(&sigma("3,1,2")).unwrap();
    let a1 = face(&r, &ev([3, 2, 1]));
    assert_eq!(a1.contribution, BigInt::from(4));
    assert_eq!(a1.volume, 5);
    assert!(!a1.matches);
    assert!(full.factorization.holds);
}

#[test]
fn motex_minimal() {
    let res = Resolution::from_complex(fixtures::motex_minimal().unwrap()).unwrap();
    assert!(check_complex(res.differentials()));
    assert!(check_minimal(res.differentials()));
    assert!(check_generic_exactness(res.differentials(), 3, 11).exact);
    let r = res.verify(&sigma("3,2,1")).unwrap();
    let a1 = face(&r, &ev([3, 2, 1]));
    let a2 = face(&r, &ev([2, 3, 1]));
    assert_eq!(a1.contribution, BigInt::from(a1.volume + 1));
    assert_eq!(a2.contribution, BigInt::from(a2.volume) - 1);
    for r in res.verify_all().unwrap().sigmas {
        assert_eq!(r.pairing, BigInt::from(9));
    }
}

#[test]
fn two_variable_volumes() {
    // generators z1^{a_j} z2^{b_j} with a decreasing, b increasing
    let m = parse_ideal("x1^5, x1^3*x2, x1*x2^3, x2^4").unwrap();
    let res = Resolution::scarf(&m).unwrap();
    let (_, vols) = res.predicted(&Permutation::identity(2)).unwrap();
    let labels: Vec<ExponentVector> = res
        .complex()
        .top_cells()
        .iter()
        .map(|c| c.label.clone())
        .collect();
    // corner (a_j, b_{j+1}) gets a_j * (b_{j+1} - b_j)
    for (label, vol) in labels.iter().zip(vols) {
        let expected = match label.as_slice() {
            [5, 1] => 5,
            [3, 3] => 3 * 2,
            [1, 4] => 1,
            other => panic!("unexpected corner {other:?}"),
        };
        assert_eq!(vol, expected);
    }
}

#[test]
fn two_variable_slicing_directions() {
    let m = parse_ideal("x1^5, x1^3*x2, x1*x2^3, x2^4").unwrap();
    let st = Staircase::new(&m).unwrap();
    let shapes = |s: &str| -> Vec<String> {
        st.partition(&sigma(s))
            .unwrap()
            .parts
            .iter()
            .map(|p| p.cells.as_cuboid().unwrap().to_string())
            .collect()
    };
    // x1 first: horizontal strips starting at x1 = 0
    assert_eq!(
        shapes("1,2"),
        vec!["]0,5]x]0,1]", "]0,3]x]1,3]", "]0,1]x]3,4]"]
    );
    // x2 first: vertical strips starting at x2 = 0
    assert_eq!(
        shapes("2,1"),
        vec!["]0,1]x]0,4]", "]1,3]x]0,3]", "]3,5]x]0,1]"]
    );
}
