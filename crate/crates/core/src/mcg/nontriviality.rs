// SPDX-License-Identifier: Apache-2.0

//! Is `T_c^q` a nontrivial mapping class?

use num_bigint::BigInt;
use num_traits::Zero;

use super::homology::{thurston_intersection, twist_homology, HomologyClass};
use crate::words::{Atlas, Curve};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NontrivialityCertificate {
    /// A class moved by the twist on homology.
    Homology {
        probe: HomologyClass,
        image: HomologyClass,
    },
    /// `i(T_c^q(b), b) = |q| i(c, b)^2 > 0` for an atlas curve `b`.
    Thurston { probe: alloc::string::String, intersection: BigInt },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwistTriviality {
    Nontrivial(NontrivialityCertificate),
    Trivial,
    Unknown,
}

/// Decides `T_c^q != 1` from homology or, for separating curves, from an
/// atlas curve crossing `c`.
///
/// `c` counts as null-homotopic when its `pi_1` word is empty.
pub fn twist_nontriviality(c: &Curve, q: i64, atlas: Option<&Atlas>) -> TwistTriviality {
    if q == 0 || c.pi1_word().is_some_and(|w| w.is_empty()) {
        return TwistTriviality::Trivial;
    }
    let a = c.homology();
    if !a.is_zero() {
        for i in 0..a.rank() {
            let probe = HomologyClass::basis(a.genus(), i);
            let image = twist_homology(a, q, &probe).expect("same genus");
            if image != probe {
                return TwistTriviality::Nontrivial(NontrivialityCertificate::Homology { probe, image });
            }
        }
    }
    if let Some(atlas) = atlas {
        if let Some(ci) = atlas.index_of(c.name()) {
            for (j, other) in atlas.curves().iter().enumerate() {
                let i_cb = atlas.geom()[ci][j];
                if j != ci && i_cb > 0 {
                    let intersection = thurston_intersection(q, i_cb);
                    debug_assert!(!intersection.is_zero());
                    return TwistTriviality::Nontrivial(NontrivialityCertificate::Thurston {
                        probe: other.name().into(),
                        intersection,
                    });
                }
            }
        }
    }
    TwistTriviality::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::CyclicWord;
    use alloc::vec;

    fn curve(name: &str, pi1: &str, coords: &[i64]) -> Curve {
        let h = HomologyClass::from_coords(coords).unwrap();
        let sep = h.is_zero();
        Curve::new(name, CyclicWord::parse(name).unwrap(), Some(CyclicWord::parse(pi1).unwrap()), h, sep).unwrap()
    }

    #[test]
    fn nonseparating_twist_moves_homology() {
        let a = curve("a", "a1", &[1, 0]);
        let TwistTriviality::Nontrivial(NontrivialityCertificate::Homology { probe, image }) =
            twist_nontriviality(&a, 5, None)
        else {
            panic!("expected a homology certificate");
        };
        assert_eq!(probe, HomologyClass::basis(1, 1));
        assert_eq!(image, HomologyClass::from_coords(&[5, 1]).unwrap());
    }

    #[test]
    fn zero_power_and_empty_word_are_trivial() {
        let a = curve("a", "a1", &[1, 0]);
        assert_eq!(twist_nontriviality(&a, 0, None), TwistTriviality::Trivial);
        let e = Curve::new("e", CyclicWord::empty(), Some(CyclicWord::empty()), HomologyClass::zero(1), true).unwrap();
        assert_eq!(twist_nontriviality(&e, 3, None), TwistTriviality::Trivial);
    }

    #[test]
    fn separating_twist_needs_an_atlas() {
        let s = curve("s", "a1 b1 a1' b1'", &[0, 0, 0, 0]);
        assert_eq!(twist_nontriviality(&s, 2, None), TwistTriviality::Unknown);
        let c = curve("c", "a1", &[1, 0, 0, 0]);
        let lonely = Atlas::new(vec![s.clone(), c.clone()], vec![vec![0, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(twist_nontriviality(&s, 2, Some(&lonely)), TwistTriviality::Unknown);
        let crossing = Atlas::new(vec![s.clone(), c], vec![vec![0, 2], vec![2, 0]], vec![vec![0, 0], vec![0, 0]]).unwrap();
        assert_eq!(
            twist_nontriviality(&s, -3, Some(&crossing)),
            TwistTriviality::Nontrivial(NontrivialityCertificate::Thurston {
                probe: "c".into(),
                intersection: BigInt::from(12),
            })
        );
    }
}
