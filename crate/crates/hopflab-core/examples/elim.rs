use hopflab_core::catalog::{spectrum, Family, ModelSpec, Param, SpaceForm};
use hopflab_core::linalg::{Field, QuadField, ScalarField};
use hopflab_core::scalar::{Scalar, SymVar};
use hopflab_core::tangent::{e3_residual, elim_q_residual};

fn show(label: &str, s: &Scalar) {
    match s {
        Scalar::Sym(sym) => {
            println!("{label}: even num = {}", hopflab_core::scalar::ratfunc::format_ratfunc(&sym.even, "x"));
            println!("{label}: odd  num = {}", hopflab_core::scalar::ratfunc::format_ratfunc(&sym.odd, "x"));
        }
        other => println!("{label}: {other}"),
    }
}

fn main() {
    // A2, m=3, k=1
    let sf = SpaceForm::projective(3);
    let (c, n) = (1i64, 5i64);
    let spec = ModelSpec::new(Family::A2, sf, Some(1), Param::Symbolic);
    let sp = spectrum(&spec).unwrap();
    let f1 = sp.f(); let f2 = sp.f2(); let kappa = sp.kappa.clone();
    let mu1 = Scalar::sym_root(SymVar::T);
    let mu3 = Scalar::int(-1).try_div(&mu1).unwrap();
    let field = ScalarField;
    let aff = |mu: &Scalar, use50: bool| -> (Scalar, Scalar) {
        let f = |p: &Scalar| if use50 {
            elim_q_residual(&field, c, n, &kappa, &f1, &f2, mu, mu, p)
        } else {
            e3_residual(&field, c, n, &kappa, &f1, &f2, mu, mu, p)
        };
        let a0 = f(&Scalar::zero());
        let a1 = &f(&Scalar::one()) - &a0;
        (a0, a1)
    };
    let (a1v, b1v) = aff(&mu1, false);
    let (a3v, b3v) = aff(&mu3, false);
    let det = &(&a1v * &b3v) - &(&a3v * &b1v);
    show("A2 e3 det", &det);
    let (a1q, b1q) = aff(&mu1, true);
    let (a3q, b3q) = aff(&mu3, true);
    let detq = &(&a1q * &b3q) - &(&a3q * &b1q);
    show("A2 q-free det", &detq);
    // subtracted cross
    let cross = &(&(&a1v - &a3v) * &(&b1q - &b3q)) - &(&(&a1q - &a3q) * &(&b1v - &b3v));
    show("A2 cross", &cross);
    // direct compatibility form
    let direct = {
        let t1 = &f1 * &(&f2 + &(&f1 * &f1));
        let t2 = &(&(&Scalar::int(2) * &kappa) * &f1) * &(&f1 + &kappa);
        let t3 = &Scalar::int(c * (n + 3)) * &f1;
        let t4 = &Scalar::int(4 * c) * &kappa;
        &(&(&t1 + &t2) - &t3) - &t4
    };
    show("A2 direct", &direct);

    // B, m=2 projective
    let (c, n) = (1i64, 3i64);
    let spec = ModelSpec::new(Family::B, SpaceForm::projective(2), None, Param::Symbolic);
    let sp = spectrum(&spec).unwrap();
    let f1 = sp.f(); let f2 = sp.f2();
    let kappa = Scalar::sym_root(SymVar::Kappa2);
    let beta = Scalar::int(-4).try_div(&kappa).unwrap();
    let qf = QuadField::new(beta, Scalar::int(1));
    let f1q = qf.scalar(f1.clone()); let f2q = qf.scalar(f2.clone()); let kq = qf.scalar(kappa.clone());
    let mu2 = qf.root(); let mu4 = qf.conjugate_root();
    let aff_b = |use50: bool| {
        let f = |p: &hopflab_core::linalg::QuadElem| if use50 {
            elim_q_residual(&qf, c, n, &kq, &f1q, &f2q, &mu2, &mu4, p)
        } else {
            e3_residual(&qf, c, n, &kq, &f1q, &f2q, &mu2, &mu4, p)
        };
        let a = f(&qf.zero());
        let b = qf.sub(&f(&qf.one()), &a);
        (a, b)
    };
    let (a, b) = aff_b(false);
    let det_b = &(&a.0 * &b.1) - &(&a.1 * &b.0);
    show("B e3 component det", &det_b);
    let (aq, bq) = aff_b(true);
    let det_bq = &(&aq.0 * &bq.1) - &(&aq.1 * &bq.0);
    show("B q-free component det", &det_bq);
    // p from odd parts of each
    let p3 = (-a.1.clone()).try_div(&b.1).unwrap();
    show("B p from e3 odd", &p3);
    let p50 = (-aq.1.clone()).try_div(&bq.1).unwrap();
    show("B p from 50 odd", &p50);
}
