//! Worked tables reproduced through the public API.

use affpaths::combinatorics::{kostka_foulkes, kostka_number, Composition, Partition};
use affpaths::crystal::{Kind, Path};
use affpaths::energy::{energy, energy_elines};
use affpaths::fermionic::{
    f_lr_prime, ff_kostka, ff_unrestricted_antisym, ff_unrestricted_sym,
};
use affpaths::paths::{hw_restricted_sum, hw_set, onedsum, PathClass};
use affpaths::qalgebra::LaurentPoly;

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn comp(v: &[usize]) -> Composition {
    Composition::new(v.to_vec())
}

fn poly(low: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_coeffs(low, c)
}

#[test]
fn four_component_energy() {
    let p = Path::parse(Kind::Sym, 3, "133⊗22⊗23⊗2").unwrap();
    assert_eq!(energy(&p).unwrap(), 4);
    assert_eq!(energy_elines(&p).unwrap().0, 4);
}

#[test]
fn kostka_table_sym() {
    let rows: [(&[usize], i64, LaurentPoly); 6] = [
        (&[6], 1, poly(7, &[1])),
        (&[5, 1], 2, poly(4, &[1, 1, 1])),
        (&[4, 2], 2, poly(3, &[2, 1, 1])),
        (&[4, 1, 1], 1, poly(2, &[1, 1, 1])),
        (&[3, 3], 1, poly(2, &[1, 0, 1])),
        (&[3, 2, 1], 1, poly(1, &[1, 2, 1])),
    ];
    let mut total = LaurentPoly::zero();
    for (eta, k, kq) in rows {
        let eta = part(eta);
        assert_eq!(kostka_number(&eta, &comp(&[3, 2, 1])).unwrap(), k.into());
        assert_eq!(kostka_foulkes(&eta, &comp(&[2, 2, 1, 1])).unwrap(), kq);
        assert_eq!(ff_kostka(3, &eta, &part(&[2, 2, 1, 1])).unwrap(), kq);
        total += &kq.scale(&k.into());
    }
    let g = poly(1, &[1, 4, 6, 6, 4, 2, 1]);
    assert_eq!(total, g);
    assert_eq!(onedsum(3, &part(&[2, 2, 1, 1]), Kind::Sym, &PathClass::Unrestricted(comp(&[3, 2, 1]))).unwrap(), g);
    assert_eq!(ff_unrestricted_sym(3, &comp(&[3, 2, 1]), &part(&[2, 2, 1, 1])).unwrap(), g);
}

#[test]
fn kostka_table_antisym() {
    let rows: [(&[usize], i64, LaurentPoly); 4] = [
        (&[3, 3, 1], 1, poly(2, &[1, 1, 1])),
        (&[3, 2, 2], 1, poly(1, &[1, 1, 1])),
        (&[3, 2, 1, 1], 2, poly(1, &[1, 1])),
        (&[2, 2, 2, 1], 2, poly(0, &[1])),
    ];
    let mut total = LaurentPoly::zero();
    for (eta, k, kq) in rows {
        let eta = part(eta);
        assert_eq!(kostka_number(&eta.conjugate(), &comp(&[3, 2, 2])).unwrap(), k.into());
        assert_eq!(kostka_foulkes(&eta, &comp(&[2, 2, 2, 1])).unwrap(), kq);
        total += &kq.scale(&k.into());
    }
    let g = poly(0, &[2, 3, 4, 2, 1]);
    assert_eq!(total, g);
    let mu = part(&[2, 2, 2, 1]);
    assert_eq!(onedsum(3, &mu, Kind::Antisym, &PathClass::Unrestricted(comp(&[3, 2, 2]))).unwrap(), g);
    assert_eq!(ff_unrestricted_antisym(3, &comp(&[3, 2, 2]), &mu).unwrap(), g);
}

#[test]
fn restricted_examples() {
    let x = onedsum(3, &part(&[2, 2, 1, 1]), Kind::Sym, &PathClass::Classical(part(&[3, 2, 1]))).unwrap();
    assert_eq!(x, poly(1, &[1, 2, 1]));
    let r = PathClass::Restricted { level: 2, lambda: part(&[3, 2, 1]) };
    assert_eq!(onedsum(3, &part(&[2, 2, 1, 1]), Kind::Sym, &r).unwrap(), poly(1, &[1]));
    let r = PathClass::Restricted { level: 1, lambda: part(&[3, 2, 2]) };
    assert_eq!(onedsum(3, &part(&[2, 2, 2, 1]), Kind::Antisym, &r).unwrap(), poly(4, &[1]));
}

#[test]
fn generalized_restricted_example() {
    let mu = part(&[2, 1]);
    let eta = part(&[2, 2, 1, 1]);
    let h: Vec<String> = hw_set(3, 3, 1, &mu).unwrap().iter().map(|e| e.path.to_string()).collect();
    assert_eq!(h, ["22⊗3", "22⊗2"]);
    let want = poly(1, &[1, 3, 1]);
    assert_eq!(hw_restricted_sum(3, 3, 1, &mu, &eta).unwrap(), want);
    assert_eq!(f_lr_prime(3, 3, 1, &eta, &mu).unwrap(), want);
}
