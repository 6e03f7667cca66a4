//! The claim table. Each entry is data: adding or amending a claim never touches the
//! predicate code.

use super::fixtures::{Fixture, FixtureRef};
use super::props::{Family, MapProp, PointProp, Prop};
use super::{Claim, FixtureCheck, MapScope, Statement};
use crate::axioms::AxiomId;
use crate::classes::{Polarity, SetClass};

use Polarity::{Closed, Open};
use SetClass::*;

fn ax(name: &str) -> Prop {
    Prop::Axiom(axiom(name))
}

fn axiom(name: &str) -> AxiomId {
    name.parse()
        .unwrap_or_else(|e| panic!("registry names an unknown axiom: {e}"))
}

fn fam(c: SetClass, p: Polarity) -> Family {
    Family::Class(c, p)
}

fn subset(a: Family, b: Family) -> Prop {
    Prop::FamilySubset(a, b)
}

fn member(set: &'static str, class: SetClass, polarity: Polarity) -> Prop {
    Prop::Member {
        set,
        class,
        polarity,
    }
}

fn singleton_any(fams: &[Family]) -> Prop {
    Prop::EveryPoint(PointProp::AnyOf(
        fams.iter().map(|&f| PointProp::Singleton(f)).collect(),
    ))
}

fn implies(id: &'static str, location: &'static str, premise: &str, conclusion: &str) -> Claim {
    Claim::new(
        id,
        location,
        Statement::Implication {
            premises: vec![ax(premise)],
            conclusion: ax(conclusion),
        },
    )
}

fn always(id: &'static str, location: &'static str, prop: Prop) -> Claim {
    Claim::new(
        id,
        location,
        Statement::Implication {
            premises: vec![],
            conclusion: prop,
        },
    )
}

fn iff(id: &'static str, location: &'static str, left: Prop, right: Prop) -> Claim {
    Claim::new(id, location, Statement::Equivalence { left, right })
}

fn on(space: Fixture, checks: Vec<(Prop, bool)>) -> Vec<FixtureCheck> {
    on_ref(FixtureRef::Space(space), checks)
}

fn on_ref(space: FixtureRef, checks: Vec<(Prop, bool)>) -> Vec<FixtureCheck> {
    checks
        .into_iter()
        .map(|(prop, expected)| FixtureCheck {
            space,
            prop,
            expected,
        })
        .collect()
}

fn fixtures(id: &'static str, location: &'static str, checks: Vec<FixtureCheck>) -> Claim {
    Claim::new(id, location, Statement::Fixtures(checks))
}

fn maps(
    id: &'static str,
    location: &'static str,
    scope: MapScope,
    premises: Vec<MapProp>,
    conclusion: Vec<MapProp>,
    equivalence: bool,
) -> Claim {
    Claim::new(
        id,
        location,
        Statement::Maps {
            scope,
            premises,
            conclusion,
            equivalence,
        },
    )
}

/// Every registered claim, in report order.
pub fn registry() -> Vec<Claim> {
    use Fixture::*;
    let tb = axiom("h*-tb");
    let td = axiom("h*-td");
    vec![
        // Basic separation properties.
        fixtures(
            "RMK-2.4-A",
            "Remark 2.4",
            on(Sigma1, vec![(ax("semi-c0"), true), (ax("c0"), false)]),
        ),
        fixtures(
            "RMK-2.4-A-Y",
            "Remark 2.4 (read on (Y,σ))",
            on(Sigma, vec![(ax("semi-c0"), true), (ax("c0"), false)]),
        ),
        fixtures(
            "RMK-2.4-B",
            "Remark 2.4",
            on(
                Tau2,
                vec![(ax("semi-c1"), true), (ax("c0"), true), (ax("c1"), false)],
            ),
        ),
        fixtures(
            "RMK-2.4-C",
            "Remark 2.4",
            on(Sigma2, vec![(ax("semi-t0"), true), (ax("semi-c0"), false)]),
        ),
        fixtures(
            "RMK-2.4-D",
            "Remark 2.4",
            on(
                Eta1,
                vec![(ax("alpha-space"), true), (ax("alpha-c0"), false)],
            ),
        ),
        implies("THM-2.5-1a", "Theorem 2.5(1)", "c1", "c0"),
        implies("THM-2.5-1b", "Theorem 2.5(1)", "semi-c1", "semi-c0"),
        implies("THM-2.5-2a", "Theorem 2.5(2)", "c0", "semi-c0"),
        implies("THM-2.5-2b", "Theorem 2.5(2)", "c1", "semi-c1"),
        implies("THM-2.5-3", "Theorem 2.5(3)", "r0", "weakly-r0"),
        implies("THM-2.5-4", "Theorem 2.5(4)", "weakly-r0", "weakly-semi-r0"),
        implies("THM-2.5-5a", "Theorem 2.5(5)", "semi-c0", "semi-t0"),
        implies("THM-2.5-5b", "Theorem 2.5(5)", "semi-c1", "semi-t1"),
        // SC* separation.
        implies("THM-3.2-1", "Theorem 3.2(1)", "sc*-c1", "sc*-c0"),
        implies("THM-3.2-2a", "Theorem 3.2(2)", "sc*-c0", "semi-c0"),
        implies("THM-3.2-2b", "Theorem 3.2(2)", "sc*-c1", "semi-c1"),
        implies(
            "THM-3.2-3a",
            "Theorem 3.2(3)",
            "weakly-sc*-r0",
            "weakly-semi-r0",
        ),
        implies(
            "THM-3.2-3b",
            "Theorem 3.2(3)",
            "weakly-sc*-r0",
            "weakly-pre-r0",
        ),
        implies("THM-3.2-4", "Theorem 3.2(4)", "w-c0", "weakly-sc*-c0"),
        implies(
            "THM-3.2-5a",
            "Theorem 3.2(5)",
            "weakly-sc*-c0",
            "weakly-semi-c0",
        ),
        implies(
            "THM-3.2-5b",
            "Theorem 3.2(5)",
            "weakly-sc*-c0",
            "weakly-pre-c0",
        ),
        implies("THM-3.2-6a", "Theorem 3.2(6)", "sc*-c0", "semi-t0"),
        implies("THM-3.2-6b", "Theorem 3.2(6)", "sc*-c1", "semi-t1"),
        implies("THM-3.2-7", "Theorem 3.2(7)", "weakly-r0", "weakly-sc*-r0"),
        Claim::new(
            "THM-3.2-8",
            "Theorem 3.2(8)",
            Statement::Independence {
                first: ax("weakly-sc*-r0"),
                second: ax("weakly-sc*-c0"),
                first_only: FixtureRef::Space(Tau1),
                second_only: FixtureRef::Space(Tau2),
            },
        ),
        fixtures(
            "RMK-3.3-A",
            "Remark 3.3",
            on(Tau2, vec![(ax("sc*-c0"), true), (ax("sc*-c1"), false)]),
        ),
        fixtures(
            "RMK-3.3-B",
            "Remark 3.3",
            on(
                Sigma1,
                vec![
                    (ax("semi-c0"), true),
                    (ax("semi-c1"), true),
                    (ax("sc*-c1"), false),
                    (ax("sc*-c0"), false),
                ],
            ),
        ),
        fixtures(
            "RMK-3.3-C",
            "Remark 3.3",
            on(
                Sigma,
                vec![(ax("weakly-semi-r0"), true), (ax("weakly-sc*-r0"), false)],
            ),
        ),
        fixtures(
            "RMK-3.3-D",
            "Remark 3.3",
            on(
                Tau2,
                vec![(ax("weakly-sc*-c0"), true), (ax("weakly-sc*-r0"), false)],
            ),
        ),
        fixtures(
            "RMK-3.3-E",
            "Remark 3.3",
            on(
                Tau1,
                vec![(ax("weakly-sc*-r0"), true), (ax("weakly-sc*-c0"), false)],
            ),
        ),
        iff(
            "THM-3.4",
            "Theorem 3.4",
            ax("weakly-sc*-r0"),
            Prop::EveryPoint(PointProp::KernelProper(SCStar)),
        ),
        iff(
            "THM-3.5",
            "Theorem 3.5",
            ax("weakly-sc*-c0"),
            Prop::EveryPoint(PointProp::InProperClosed(SCStar)),
        ),
        implies("THM-3.6-a", "Theorem 3.6", "sc*-c0", "weakly-sc*-c0"),
        implies("THM-3.6-b", "Theorem 3.6", "sc*-c1", "weakly-sc*-c0"),
        fixtures(
            "RMK-3.7-A",
            "Remark 3.7",
            on(
                Eta1,
                vec![(ax("weakly-sc*-c0"), true), (ax("sc*-c0"), false)],
            ),
        ),
        fixtures(
            "RMK-3.7-B",
            "Remark 3.7",
            on(
                Sigma,
                vec![
                    (ax("sc*-c0"), true),
                    (ax("weakly-sc*-c0"), true),
                    (ax("sc*-c1"), false),
                ],
            ),
        ),
        fixtures("THM-3.8", "Theorem 3.8", {
            let mut v = on(Sigma, vec![(ax("sc*-c0"), true)]);
            v.extend(on_ref(
                FixtureRef::Subspace(Sigma, "ac"),
                vec![(ax("sc*-c0"), false)],
            ));
            v
        }),
        // H* classes.
        always(
            "RMK-4.1-a",
            "Remark 4.1",
            subset(fam(Alpha, Closed), fam(HStar, Closed)),
        ),
        always(
            "RMK-4.1-b",
            "Remark 4.1",
            subset(fam(Alpha, Open), fam(HStar, Open)),
        ),
        always(
            "DIAG-4-EDGE-1",
            "§4 diagram: closed ⇒ α-closed",
            subset(fam(SetClass::Open, Closed), fam(Alpha, Closed)),
        ),
        always(
            "DIAG-4-EDGE-2",
            "§4 diagram: α-closed ⇒ gα-closed",
            subset(fam(Alpha, Closed), fam(GAlpha, Closed)),
        ),
        always(
            "DIAG-4-EDGE-3",
            "§4 diagram: gα-closed ⇒ αg-closed",
            subset(fam(GAlpha, Closed), fam(AlphaG, Closed)),
        ),
        always(
            "DIAG-4-EDGE-4",
            "§4 diagram: H*-closed ⇒ gH*-closed",
            subset(fam(HStar, Closed), fam(GHStar, Closed)),
        ),
        always(
            "DIAG-4-EDGE-5",
            "§4 diagram: gH*-closed ⇒ H*g-closed",
            subset(fam(GHStar, Closed), fam(HStarG, Closed)),
        ),
        always(
            "DIAG-4-EDGE-6",
            "§4 diagram: α-closed ⇒ H*-closed",
            subset(fam(Alpha, Closed), fam(HStar, Closed)),
        ),
        always(
            "DIAG-4-EDGE-7",
            "§4 diagram: gα-closed ⇒ gH*-closed",
            subset(fam(GAlpha, Closed), fam(GHStar, Closed)),
        ),
        always(
            "DIAG-4-EDGE-8",
            "§4 diagram: αg-closed ⇒ H*g-closed",
            subset(fam(AlphaG, Closed), fam(HStarG, Closed)),
        ),
        fixtures(
            "EX-4.1.1",
            "Example 4.1.1",
            on(
                TauExample,
                vec![
                    (member("c", Alpha, Closed), true),
                    (member("c", HStar, Closed), true),
                    (member("c", SetClass::Open, Closed), false),
                ],
            ),
        ),
        fixtures(
            "EX-4.1.2",
            "Example 4.1.2",
            on(
                TauExample,
                vec![
                    (member("c", Alpha, Closed), true),
                    (member("c", GHStar, Closed), true),
                    (member("c", SetClass::Open, Closed), false),
                ],
            ),
        ),
        always(
            "RMK-4.2-i",
            "Remark 4.2(i)",
            Prop::FamilyEq(fam(HStarG, Open), Family::ClosedSubsetsInInterior(HStar)),
        ),
        always(
            "RMK-4.2-ii",
            "Remark 4.2(ii)",
            Prop::All(vec![
                Prop::FamilyEq(fam(GHStar, Closed), fam(G, Closed)),
                Prop::FamilyEq(fam(GHStar, Open), fam(G, Open)),
            ]),
        ),
        // T1 / T½ family.
        implies("DIAG-5-EDGE-1", "§5 diagram: T1 ⇒ T½", "t1", "t-half"),
        implies("DIAG-5-EDGE-2", "§5 diagram: H*-Tb ⇒ T½", "h*-tb", "t-half"),
        implies(
            "DIAG-5-EDGE-3",
            "§5 diagram: H*-Tb ⇒ H*-Td",
            "h*-tb",
            "h*-td",
        ),
        implies("DIAG-5-EDGE-4", "§5 diagram: T1 ⇒ H*-T1", "t1", "h*-t1"),
        implies(
            "DIAG-5-EDGE-5",
            "§5 diagram: T½ ⇒ H*-T½",
            "t-half",
            "h*-t-half",
        ),
        implies(
            "DIAG-5-EDGE-6",
            "§5 diagram: H*-T1 ⇒ H*-T½",
            "h*-t1",
            "h*-t-half",
        ),
        fixtures(
            "EX-5.1.1",
            "Example 5.1.1",
            on(
                TauExample,
                vec![
                    (member("ab", HStar, Closed), false),
                    (
                        Prop::FamilyEq(fam(HStarG, Closed), fam(SetClass::Open, Closed)),
                        true,
                    ),
                    (ax("h*-tb"), true),
                    (ax("h*-t1"), false),
                    (ax("t1"), false),
                ],
            ),
        ),
        iff(
            "THM-5.2-i",
            "Theorem 5.2(i)",
            ax("t-half"),
            singleton_any(&[fam(SetClass::Open, Open), fam(SetClass::Open, Closed)]),
        ),
        iff(
            "THM-5.2-ii",
            "Theorem 5.2(ii)",
            ax("h*-t-half"),
            singleton_any(&[fam(HStar, Open), fam(HStar, Closed)]),
        ),
        always(
            "THM-5.3-i",
            "Theorem 5.3(i)",
            Prop::ResidueAvoids {
                member: fam(HStarG, Closed),
                closure: HStar,
                forbidden: fam(SetClass::Open, Closed),
            },
        ),
        always(
            "THM-5.3-ii",
            "Theorem 5.3(ii)",
            Prop::EveryPoint(PointProp::AnyOf(vec![
                PointProp::Singleton(fam(SetClass::Open, Closed)),
                PointProp::Cosingleton(fam(HStarG, Closed)),
            ])),
        ),
        always(
            "THM-5.3-iii",
            "Theorem 5.3(iii)",
            Prop::EveryPoint(PointProp::AnyOf(vec![
                PointProp::Singleton(fam(HStar, Closed)),
                PointProp::Cosingleton(fam(GHStar, Closed)),
            ])),
        ),
        implies("THM-5.4-i-a", "Theorem 5.4(i)", "h*-tb", "h*-td"),
        implies("THM-5.4-i-b", "Theorem 5.4(i)", "h*-tb", "t-half"),
        implies("THM-5.4-ii-a", "Theorem 5.4(ii)", "t1", "h*-t1"),
        implies("THM-5.4-ii-b", "Theorem 5.4(ii)", "t-half", "h*-t-half"),
        implies("THM-5.4-iii", "Theorem 5.4(iii)", "h*-t1", "h*-t-half"),
        Claim::new(
            "PROP-5.5-i",
            "Proposition 5.5(i)",
            Statement::Implication {
                premises: vec![ax("h*-tb")],
                conclusion: singleton_any(&[fam(HStar, Closed), fam(SetClass::Open, Open)]),
            },
        ),
        Claim::new(
            "PROP-5.5-ii",
            "Proposition 5.5(ii)",
            Statement::Implication {
                premises: vec![ax("h*-td")],
                conclusion: singleton_any(&[fam(HStar, Closed), fam(G, Open)]),
            },
        ),
        // Maps.
        maps(
            "THM-6.2-i-closed",
            "Theorem 6.2(i)",
            MapScope::AllMaps,
            vec![MapProp::PreHStarClosed],
            vec![MapProp::InducedClosed],
            true,
        ),
        maps(
            "THM-6.2-i-open",
            "Theorem 6.2(i)",
            MapScope::AllMaps,
            vec![MapProp::PreHStarOpen],
            vec![MapProp::InducedOpen],
            true,
        ),
        maps(
            "THM-6.2-ii",
            "Theorem 6.2(ii)",
            MapScope::AllMaps,
            vec![MapProp::HStarIrresolute],
            vec![MapProp::InducedContinuous],
            true,
        ),
        maps(
            "THM-6.3-i",
            "Theorem 6.3(i)",
            MapScope::Bijections,
            vec![MapProp::Homeomorphism],
            vec![
                MapProp::PreHStarClosed,
                MapProp::HStarIrresolute,
                MapProp::InverseHStarIrresolute,
            ],
            false,
        ),
        maps(
            "THM-6.3-ii-a",
            "Theorem 6.3(ii)",
            MapScope::Bijections,
            vec![MapProp::Homeomorphism, MapProp::Source(tb)],
            vec![MapProp::Target(tb)],
            false,
        ),
        maps(
            "THM-6.3-ii-b",
            "Theorem 6.3(ii)",
            MapScope::Bijections,
            vec![MapProp::Homeomorphism, MapProp::Source(td)],
            vec![MapProp::Target(td)],
            false,
        ),
    ]
}
