use std::collections::BTreeSet;
use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::Rational;

/// Tag of the distinguished linear polynomial `x - 1`.
pub const UNIT: &str = "x-1";

/// One primary block: an irreducible polynomial (opaque tag) of degree `d`
/// carrying the diagram `lambda`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Block {
    pub tag: String,
    pub d: usize,
    pub lambda: Partition,
}

impl Block {
    pub fn new(tag: impl Into<String>, d: usize, lambda: Partition) -> Self {
        Block {
            tag: tag.into(),
            d,
            lambda,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.tag == UNIT
    }

    pub fn degree(&self) -> usize {
        self.d * self.lambda.size()
    }
}

impl fmt::Debug for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}:{:?}", self.tag, self.d, self.lambda)
    }
}

/// A finitely supported map from irreducible polynomials to nonempty
/// diagrams. Also used as a conjugacy class label of `GL(n, q)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct FamilyOfDiagrams {
    blocks: Vec<Block>,
}

pub type ClassLabel = FamilyOfDiagrams;

impl FamilyOfDiagrams {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(blocks: Vec<Block>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for b in &blocks {
            if b.tag.is_empty() {
                return Err(Error::InvalidFamily("empty tag".into()));
            }
            if !seen.insert(b.tag.as_str()) {
                return Err(Error::InvalidFamily(format!("duplicate tag {:?}", b.tag)));
            }
            if b.d == 0 {
                return Err(Error::InvalidFamily(format!("tag {:?} has degree 0", b.tag)));
            }
            if b.lambda.is_empty() {
                return Err(Error::InvalidFamily(format!("tag {:?} has an empty diagram", b.tag)));
            }
            if b.is_unit() && b.d != 1 {
                return Err(Error::InvalidFamily(format!("{UNIT} must have degree 1")));
            }
        }
        Ok(FamilyOfDiagrams { blocks })
    }

    /// Additionally checks that at most `q - 1` linear tags occur, which is
    /// the number of linear polynomials other than `x` over `F_q`.
    pub fn new_for_q(blocks: Vec<Block>, q: &Rational) -> Result<Self> {
        let f = Self::new(blocks)?;
        f.check_linear_tags(q, 0)?;
        Ok(f)
    }

    pub(crate) fn check_linear_tags(&self, q: &Rational, reserved: usize) -> Result<()> {
        if !q.is_integer() {
            return Ok(());
        }
        let available = q
            .to_integer()
            .to_usize()
            .unwrap_or(usize::MAX)
            .saturating_sub(1 + reserved);
        let linear = self.blocks.iter().filter(|b| b.d == 1 && !b.is_unit()).count()
            + usize::from(reserved == 0 && self.unit().is_some());
        if linear > available {
            return Err(Error::InvalidFamily(format!(
                "{linear} linear tags but only {available} are available over F_{q}"
            )));
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let blocks: Vec<Block> =
            serde_json::from_str(s).map_err(|e| Error::InvalidFamily(e.to_string()))?;
        Self::new(blocks)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// `|f| = Σ d·|λ|`.
    pub fn degree(&self) -> usize {
        self.blocks.iter().map(Block::degree).sum()
    }

    pub fn unit(&self) -> Option<&Block> {
        self.blocks.iter().find(|b| b.is_unit())
    }

    pub fn get(&self, tag: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.tag == tag)
    }

    /// Replaces the diagram at block `i`, dropping the block when it
    /// becomes empty.
    pub(crate) fn with_diagram(&self, i: usize, lambda: Partition) -> Self {
        let mut blocks = self.blocks.clone();
        if lambda.is_empty() {
            blocks.remove(i);
        } else {
            blocks[i].lambda = lambda;
        }
        FamilyOfDiagrams { blocks }
    }

    /// Blocks sorted by tag, for order-insensitive comparison.
    pub fn canonical(&self) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.sort();
        FamilyOfDiagrams { blocks }
    }
}

impl<'de> Deserialize<'de> for FamilyOfDiagrams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Block>::deserialize(d)?;
        FamilyOfDiagrams::new(blocks).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for FamilyOfDiagrams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(&self.blocks).finish()
    }
}
