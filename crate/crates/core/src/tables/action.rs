use super::{GroupTable, LoopTable};
use crate::error::{Error, Result};
use crate::report::{Check, Report, Witness};

/// An action of a group on a loop (or group) by table automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    actor: GroupTable,
    carrier: LoopTable,
    maps: Vec<Vec<usize>>,
}

impl GroupAction {
    /// Validates and builds an action; `maps[g][x]` is `g` applied to `x`.
    pub fn new(actor: GroupTable, carrier: LoopTable, maps: Vec<Vec<usize>>) -> Result<Self> {
        let report = Self::check(&actor, &carrier, &maps);
        if let Some(bad) = report.required_failures().next() {
            return Err(Error::InvalidAction(format!("{} fails: {:?}", bad.id, bad.witness)));
        }
        Ok(Self { actor, carrier, maps })
    }

    /// Exhaustive check of bijectivity, table preservation and the action law.
    pub fn check(actor: &GroupTable, carrier: &LoopTable, maps: &[Vec<usize>]) -> Report {
        let mut report = Report::new("group action");
        let (na, nc) = (actor.order(), carrier.order());
        let shaped = maps.len() == na && maps.iter().all(|m| m.len() == nc && m.iter().all(|&x| x < nc));
        report.push(Check::from_bool(
            "ACT-shape",
            "",
            shaped,
            format!("expected {na} maps of length {nc} with entries below {nc}"),
        ));
        if !shaped {
            return report;
        }
        for (g, m) in maps.iter().enumerate() {
            let mut seen = vec![false; nc];
            let bijective = m.iter().all(|&x| !std::mem::replace(&mut seen[x], true));
            report.push(Check::from_bool("ACT-bijective", format!("g={g}"), bijective, "map is not a bijection"));
            let mut hom = Check::pass("ACT-automorphism", format!("g={g}"));
            'h: for x in 0..nc {
                for y in 0..nc {
                    if m[carrier.mul(x, y)] != carrier.mul(m[x], m[y]) {
                        hom = Check::fail(
                            "ACT-automorphism",
                            format!("g={g}"),
                            Witness::Elements { elements: vec![x, y], detail: "g(xy) ≠ g(x)g(y)".into() },
                        );
                        break 'h;
                    }
                }
            }
            report.push(hom);
        }
        report.push(Check::from_bool(
            "ACT-identity",
            "",
            (0..nc).all(|x| maps[0][x] == x),
            "identity does not act trivially",
        ));
        let mut law = Check::pass("ACT-composition", "");
        'l: for g in 0..na {
            for h in 0..na {
                for x in 0..nc {
                    if maps[actor.mul(g, h)][x] != maps[g][maps[h][x]] {
                        law = Check::fail(
                            "ACT-composition",
                            "",
                            Witness::Elements { elements: vec![g, h, x], detail: "(gh)·x ≠ g·(h·x)".into() },
                        );
                        break 'l;
                    }
                }
            }
        }
        report.push(law);
        report
    }

    /// The action in which every element fixes every carrier element.
    pub fn trivial(actor: GroupTable, carrier: LoopTable) -> Self {
        let maps = vec![(0..carrier.order()).collect(); actor.order()];
        Self::new(actor, carrier, maps).expect("trivial action")
    }

    /// `C_2` acting on an abelian group by inversion.
    pub fn inversion(carrier: &GroupTable) -> Result<Self> {
        let maps = vec![(0..carrier.order()).collect(), (0..carrier.order()).map(|x| carrier.inv(x)).collect()];
        Self::new(GroupTable::cyclic(2), LoopTable::from(carrier), maps)
    }

    pub fn actor(&self) -> &GroupTable {
        &self.actor
    }

    pub fn carrier(&self) -> &LoopTable {
        &self.carrier
    }

    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn act(&self, g: usize, x: usize) -> Result<usize> {
        if g >= self.actor.order() {
            return Err(Error::IndexError { what: "actor element", index: g, size: self.actor.order() });
        }
        if x >= self.carrier.order() {
            return Err(Error::IndexError { what: "carrier element", index: x, size: self.carrier.order() });
        }
        Ok(self.maps[g][x])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inversion_on_c3() {
        let a = GroupAction::inversion(&GroupTable::cyclic(3)).unwrap();
        assert_eq!(a.act(1, 1).unwrap(), 2);
        assert_eq!(a.act(0, 2).unwrap(), 2);
        assert!(a.act(2, 0).is_err());
        assert!(a.act(0, 3).is_err());
    }

    #[test]
    fn inversion_on_s3_is_not_an_automorphism() {
        assert!(matches!(GroupAction::inversion(&GroupTable::symmetric(3)), Err(Error::InvalidAction(_))));
    }

    #[test]
    fn trivial_action_fixes_everything() {
        let c3 = GroupTable::cyclic(3);
        let a = GroupAction::trivial(GroupTable::cyclic(2), LoopTable::from(&c3));
        for g in 0..2 {
            for x in 0..3 {
                assert_eq!(a.act(g, x).unwrap(), x);
            }
        }
    }

    #[test]
    fn action_law_spot_check() {
        // C_4 acting on C_5 by x ↦ 2^k x
        let c5 = GroupTable::cyclic(5);
        let maps = (0..4).map(|k| (0..5).map(|x| (x * 2usize.pow(k)) % 5).collect()).collect();
        let a = GroupAction::new(GroupTable::cyclic(4), LoopTable::from(&c5), maps).unwrap();
        let actor = a.actor().clone();
        for g in 0..4 {
            for h in 0..4 {
                for x in 0..5 {
                    assert_eq!(a.act(actor.mul(g, h), x).unwrap(), a.act(g, a.act(h, x).unwrap()).unwrap());
                }
            }
        }
    }

    #[test]
    fn non_homomorphic_maps_rejected() {
        let c3 = GroupTable::cyclic(3);
        // swap 0 and 1: not even identity-preserving
        let maps = vec![vec![0, 1, 2], vec![1, 0, 2]];
        assert!(GroupAction::new(GroupTable::cyclic(2), LoopTable::from(&c3), maps).is_err());
    }
}
