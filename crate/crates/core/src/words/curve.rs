// SPDX-License-Identifier: Apache-2.0

//! Named curves on a handlebody boundary and the intersection data relating
//! them.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::surface::parse_generator;
use super::word::CyclicWord;
use crate::error::{bail, Error, Result};
use crate::mcg::homology::{intersection_pairing, HomologyClass};

/// The names of a meridian system `x_1, ..., x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| String::from(s.as_ref())).collect();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(char::is_whitespace) || n.contains('\'') {
                bail!(Data, "invalid alphabet name `{n}`");
            }
            if names[..i].contains(n) {
                bail!(Data, "duplicate alphabet name `{n}`");
            }
        }
        Ok(Alphabet { names })
    }

    /// `x1, ..., xn`.
    pub fn standard(n: usize) -> Self {
        Alphabet {
            names: (1..=n).map(|i| alloc::format!("x{i}")).collect(),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.iter().any(|n| n == name)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Fails unless every letter of `w` is in the alphabet.
    pub fn check_word(&self, w: &CyclicWord) -> Result<()> {
        match w.letters().iter().find(|l| !self.contains(&l.name)) {
            Some(l) => bail!(Data, "letter `{}` is not in the alphabet", l.name),
            None => Ok(()),
        }
    }
}

/// Abelianizes a surface-group word to coordinates in `a_1, b_1, ...`.
pub fn abelianize_pi1(genus: usize, w: &CyclicWord) -> Result<HomologyClass> {
    let mut coords: Vec<BigInt> = (0..2 * genus).map(|_| BigInt::zero()).collect();
    for l in w.letters() {
        let Some((i, is_b)) = parse_generator(&l.name, genus) else {
            bail!(Parse, "`{}` is not a generator of the genus-{genus} surface group", l.name);
        };
        coords[2 * (i - 1) + usize::from(is_b)] += l.sign();
    }
    HomologyClass::new(genus, coords)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    name: String,
    system_word: CyclicWord,
    pi1_word: Option<CyclicWord>,
    homology: HomologyClass,
    separating: bool,
    atlas_id: Option<usize>,
}

impl Curve {
    /// Builds a curve, checking that it separates exactly when it is
    /// null-homologous and that its `pi_1` word abelianizes to its class.
    pub fn new(
        name: &str,
        system_word: CyclicWord,
        pi1_word: Option<CyclicWord>,
        homology: HomologyClass,
        separating: bool,
    ) -> Result<Self> {
        if name.is_empty() {
            bail!(Data, "curve names must be nonempty");
        }
        if separating != homology.is_zero() {
            bail!(
                Data,
                "curve `{name}`: separating flag {separating} disagrees with class {homology}"
            );
        }
        if let Some(w) = &pi1_word {
            let ab = abelianize_pi1(homology.genus(), w)?;
            if ab != homology {
                bail!(Data, "curve `{name}`: pi_1 word abelianizes to {ab}, not {homology}");
            }
        }
        Ok(Curve {
            name: name.into(),
            system_word,
            pi1_word,
            homology,
            separating,
            atlas_id: None,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn system_word(&self) -> &CyclicWord {
        &self.system_word
    }

    pub fn pi1_word(&self) -> Option<&CyclicWord> {
        self.pi1_word.as_ref()
    }

    pub fn homology(&self) -> &HomologyClass {
        &self.homology
    }

    pub fn genus(&self) -> usize {
        self.homology.genus()
    }

    pub fn is_separating(&self) -> bool {
        self.separating
    }

    pub fn atlas_id(&self) -> Option<usize> {
        self.atlas_id
    }

    pub fn renamed(&self, name: &str) -> Self {
        let mut c = self.clone();
        c.name = name.into();
        c.atlas_id = None;
        c
    }
}

/// A finite family of curves with their pairwise geometric and algebraic
/// intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atlas {
    curves: Vec<Curve>,
    geom: Vec<Vec<u64>>,
    alg: Vec<Vec<i64>>,
}

impl Atlas {
    pub fn new(curves: Vec<Curve>, geom: Vec<Vec<u64>>, alg: Vec<Vec<i64>>) -> Result<Self> {
        let n = curves.len();
        for (i, c) in curves.iter().enumerate() {
            if curves[..i].iter().any(|d| d.name == c.name) {
                bail!(Data, "duplicate curve name `{}`", c.name);
            }
            if c.genus() != curves[0].genus() {
                bail!(Data, "curve `{}` lives on a different surface", c.name);
            }
        }
        if geom.len() != n || geom.iter().any(|r| r.len() != n) {
            bail!(Data, "geom must be a {n}x{n} matrix");
        }
        if alg.len() != n || alg.iter().any(|r| r.len() != n) {
            bail!(Data, "alg must be a {n}x{n} matrix");
        }
        for i in 0..n {
            if geom[i][i] != 0 {
                bail!(Data, "geom[{i}][{i}] must be 0");
            }
            for j in 0..n {
                let (g, a) = (geom[i][j], alg[i][j]);
                let (ci, cj) = (&curves[i].name, &curves[j].name);
                if g != geom[j][i] {
                    bail!(Data, "geom is not symmetric at ({ci}, {cj})");
                }
                if a != -alg[j][i] {
                    bail!(Data, "alg is not antisymmetric at ({ci}, {cj})");
                }
                if a.unsigned_abs() > g || (a.unsigned_abs() + g) % 2 != 0 {
                    bail!(Data, "alg {a} is incompatible with geom {g} at ({ci}, {cj})");
                }
                let pairing = intersection_pairing(&curves[i].homology, &curves[j].homology)?;
                if pairing != BigInt::from(a) {
                    bail!(Data, "alg {a} at ({ci}, {cj}) disagrees with the homology pairing {pairing}");
                }
            }
        }
        let curves = curves
            .into_iter()
            .enumerate()
            .map(|(i, mut c)| {
                c.atlas_id = Some(i);
                c
            })
            .collect();
        Ok(Atlas { curves, geom, alg })
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn geom(&self) -> &[Vec<u64>] {
        &self.geom
    }

    pub fn alg(&self) -> &[Vec<i64>] {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn genus(&self) -> Option<usize> {
        self.curves.first().map(Curve::genus)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.curves.iter().position(|c| c.name == name)
    }

    pub fn curve(&self, name: &str) -> Result<&Curve> {
        self.index_of(name)
            .map(|i| &self.curves[i])
            .ok_or_else(|| Error::UnknownName(name.into()))
    }

    fn pair(&self, a: &str, b: &str) -> Result<(usize, usize)> {
        let i = self.index_of(a).ok_or_else(|| Error::UnknownName(a.into()))?;
        let j = self.index_of(b).ok_or_else(|| Error::UnknownName(b.into()))?;
        Ok((i, j))
    }

    pub fn geom_between(&self, a: &str, b: &str) -> Result<u64> {
        let (i, j) = self.pair(a, b)?;
        Ok(self.geom[i][j])
    }

    pub fn alg_between(&self, a: &str, b: &str) -> Result<i64> {
        let (i, j) = self.pair(a, b)?;
        Ok(self.alg[i][j])
    }

    /// Largest absolute intersection entry, handy for sanity checks.
    pub fn max_geom(&self) -> u64 {
        self.geom.iter().flatten().copied().max().unwrap_or(0)
    }
}

/// `|a| <= g` and `a = g (mod 2)` for a pair of intersection numbers.
pub fn intersections_compatible(geom: u64, alg: &BigInt) -> bool {
    let a = alg.abs();
    a <= BigInt::from(geom) && ((a + geom) % 2u32).is_zero()
}
