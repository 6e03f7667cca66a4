//! Operator laws every space must satisfy, phrased as checks that name the broken law.

use fintop::{Polarity, SetClass, SpaceAnalysis, SubsetMask};

fn ensure(ok: bool, law: &str, a: SubsetMask, b: SubsetMask) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(format!(
            "{law} fails for A = {}, B = {}",
            a.display_default(),
            b.display_default()
        ))
    }
}

/// Kuratowski laws, interior/closure duality, and the closed-form closures.
pub fn topological_laws(s: &SpaceAnalysis, a: SubsetMask, b: SubsetMask) -> Result<(), String> {
    let x = s.space();
    let cl = |m| x.closure(m);
    let int = |m| x.interior(m);

    ensure(a.is_subset(cl(a)), "A ⊆ cl A", a, b)?;
    ensure(cl(cl(a)) == cl(a), "cl cl A = cl A", a, b)?;
    ensure(x.is_closed(cl(a)), "cl A is closed", a, b)?;
    ensure(
        cl(a.union(b)) == cl(a).union(cl(b)),
        "cl(A ∪ B) = cl A ∪ cl B",
        a,
        b,
    )?;
    ensure(cl(x.empty()) == x.empty(), "cl φ = φ", a, b)?;
    ensure(int(a).is_subset(a), "int A ⊆ A", a, b)?;
    ensure(int(int(a)) == int(a), "int int A = int A", a, b)?;
    ensure(x.is_open(int(a)), "int A is open", a, b)?;
    ensure(
        int(a.intersection(b)) == int(a).intersection(int(b)),
        "int(A ∩ B) = int A ∩ int B",
        a,
        b,
    )?;
    ensure(
        int(a) == cl(a.complement()).complement(),
        "int A = X∖cl(X∖A)",
        a,
        b,
    )?;

    let scl = s
        .class_closure(a, SetClass::Semi)
        .map_err(|e| e.to_string())?;
    let pcl = s
        .class_closure(a, SetClass::Pre)
        .map_err(|e| e.to_string())?;
    let acl = s
        .class_closure(a, SetClass::Alpha)
        .map_err(|e| e.to_string())?;
    ensure(scl == a.union(int(cl(a))), "scl A = A ∪ int cl A", a, b)?;
    ensure(pcl == a.union(cl(int(a))), "pcl A = A ∪ cl int A", a, b)?;
    ensure(
        acl == a.union(cl(int(cl(a)))),
        "αcl A = A ∪ cl int cl A",
        a,
        b,
    )?;
    Ok(())
}

/// Hierarchy inclusions and αO = SO ∩ PO, checked on the set `a`.
pub fn hierarchy_laws(s: &SpaceAnalysis, a: SubsetMask) -> Result<(), String> {
    let is = |c| s.is_in_class(a, c, Polarity::Open).unwrap();
    let (open, alpha, semi, pre) = (
        is(SetClass::Open),
        is(SetClass::Alpha),
        is(SetClass::Semi),
        is(SetClass::Pre),
    );
    let e = SubsetMask::empty(a.width());
    ensure(alpha == (semi && pre), "αO = SO ∩ PO", a, e)?;
    ensure(!open || alpha, "open ⇒ α-open", a, e)?;
    ensure(!alpha || semi, "α-open ⇒ semi-open", a, e)?;
    ensure(!alpha || pre, "α-open ⇒ pre-open", a, e)?;
    Ok(())
}

/// Every symmetric class closure is extensive, idempotent, monotone, and dual to the
/// class interior; polarity is complementation.
pub fn class_operator_laws(s: &SpaceAnalysis, a: SubsetMask, b: SubsetMask) -> Result<(), String> {
    for c in SetClass::symmetric() {
        let ccl = |m| s.class_closure(m, c).unwrap();
        let cint = |m| s.class_interior(m, c).unwrap();
        let law = |l: &str| format!("{} ({})", l, c.name());
        ensure(a.is_subset(ccl(a)), &law("A ⊆ ccl A"), a, b)?;
        ensure(ccl(ccl(a)) == ccl(a), &law("ccl ccl A = ccl A"), a, b)?;
        ensure(
            ccl(a).is_subset(ccl(a.union(b))),
            &law("ccl monotone"),
            a,
            b,
        )?;
        ensure(
            cint(a) == ccl(a.complement()).complement(),
            &law("cint A = X∖ccl(X∖A)"),
            a,
            b,
        )?;
        ensure(
            s.is_in_class(a, c, Polarity::Open).unwrap()
                == s.is_in_class(a.complement(), c, Polarity::Closed).unwrap(),
            &law("open ⇔ complement closed"),
            a,
            b,
        )?;
        if s.is_in_class(a, c, Polarity::Closed).unwrap() {
            ensure(ccl(a) == a, &law("closed sets are fixed by ccl"), a, b)?;
        }
    }
    Ok(())
}

pub fn all_laws(s: &SpaceAnalysis, a: SubsetMask, b: SubsetMask) -> Result<(), String> {
    topological_laws(s, a, b)?;
    hierarchy_laws(s, a)?;
    class_operator_laws(s, a, b)
}
