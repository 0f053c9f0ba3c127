//! The iterated Clifford tower: each algebra becomes the quadratic space of
//! the next one.
//!
//! Every level's algebra carries four natural quadratic forms `Re(z^g z)`,
//! and turning an algebra into the next level's generator space involves
//! three conventional choices that the construction does not pin down by
//! itself: which form to use, whether a new generator squares to the form
//! value or its negative, and which count comes first when a signature is
//! written as a pair. All 16 combinations are first-class here, and
//! [`search_convention`] ranks them against the reference chain by exhaustive
//! blade enumeration.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{
    blade_square_sign, AlgebraError, Blade, FourGroupElement, Sign, Signature, MAX_GENERATORS,
};
use crate::multivector::Multivector;
use crate::ring::Ring;

/// Reference signature tuples for levels 1..=6 of the tower, as commonly
/// quoted for this construction; [`match_reference_chain`] reports which
/// computed levels agree with them.
pub const REFERENCE_CHAIN: [(u64, u64); 6] =
    [(0, 0), (1, 0), (2, 0), (3, 1), (10, 6), (32832, 32704)];

/// Highest level whose generator tuple is computable at desk scale: level 7
/// would need the norm values of `2^65536` blades.
pub const MAX_CHAIN_LEVEL: u32 = 6;

/// Highest level whose algebra is small enough to carry multivectors
/// (level 5 has 2^16 basis blades on 16 generators).
pub const MAX_TOWER_LEVEL: u32 = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HierarchyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("chain level {requested} exceeds the computable bound {MAX_CHAIN_LEVEL}")]
    ChainBoundExceeded { requested: u32 },
    #[error("tower level {requested} exceeds the constructible bound {MAX_TOWER_LEVEL}")]
    TowerBoundExceeded { requested: u32 },
    #[error("level {requested} is not constructed (tower has {available} levels)")]
    LevelNotConstructed { requested: u32, available: u32 },
    #[error("multivector signature does not match the requested level")]
    SignatureMismatch,
}

/// Whether the generator for a blade squares to the blade's form value or to
/// its negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SquareRule {
    Q,
    MinusQ,
}

/// Which count a `Cliff(a, b)` tuple lists first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotationOrder {
    PlusFirst,
    MinusFirst,
}

/// One of the 16 convention combinations for iterating the tower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConventionConfig {
    pub form: FourGroupElement,
    pub square_rule: SquareRule,
    pub order: NotationOrder,
}

impl Default for ConventionConfig {
    /// The natural norm `Re z^2`, generators squaring to the form value,
    /// plus count first.
    fn default() -> Self {
        ConventionConfig {
            form: FourGroupElement::I,
            square_rule: SquareRule::Q,
            order: NotationOrder::PlusFirst,
        }
    }
}

impl ConventionConfig {
    /// All 16 configurations in a fixed enumeration order (form outermost,
    /// then square rule, then notation order).
    pub fn all() -> Vec<ConventionConfig> {
        let mut out = Vec::with_capacity(16);
        for form in FourGroupElement::ALL {
            for square_rule in [SquareRule::Q, SquareRule::MinusQ] {
                for order in [NotationOrder::PlusFirst, NotationOrder::MinusFirst] {
                    out.push(ConventionConfig {
                        form,
                        square_rule,
                        order,
                    });
                }
            }
        }
        out
    }
}

/// Counts of +1 and -1 values of a quadratic form on a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticSignature {
    pub n_plus: u64,
    pub n_minus: u64,
}

impl QuadraticSignature {
    pub fn total(&self) -> u64 {
        self.n_plus + self.n_minus
    }

    /// The tuple as displayed under a notation order.
    pub fn as_tuple(&self, order: NotationOrder) -> (u64, u64) {
        match order {
            NotationOrder::PlusFirst => (self.n_plus, self.n_minus),
            NotationOrder::MinusFirst => (self.n_minus, self.n_plus),
        }
    }
}

/// `Re(b^g b)` for a basis blade: the grade action of the four-group element
/// times the sign of the blade's square.
pub fn blade_form_value(blade: Blade, sig: &Signature, form: FourGroupElement) -> Sign {
    form.grade_sign(blade.grade())
        .compose(blade_square_sign(blade, sig))
}

/// The square assigned to the new generator for `blade` under a convention.
pub fn generator_square(blade: Blade, sig: &Signature, cfg: &ConventionConfig) -> Sign {
    let value = blade_form_value(blade, sig, cfg.form);
    match cfg.square_rule {
        SquareRule::Q => value,
        SquareRule::MinusQ => value.flip(),
    }
}

/// Signature of the chosen quadratic form on the whole algebra, by direct
/// enumeration of all `2^k` basis blades.
pub fn induced_signature(sig: &Signature, cfg: &ConventionConfig) -> QuadraticSignature {
    let mut n_plus = 0;
    let mut n_minus = 0;
    for bits in 0..sig.blade_count() {
        match generator_square(Blade::from_bits(bits as u32), sig, cfg) {
            Sign::Plus => n_plus += 1,
            Sign::Minus => n_minus += 1,
        }
    }
    QuadraticSignature { n_plus, n_minus }
}

/// One level of the chain. `generators` is the level's generator signature
/// (what a `Cliff(p, q)` tuple names); `induced` is the signature of the norm
/// form on the level's algebra, i.e. the next level's generator counts, when
/// it is computable (`log2_dim <= 24`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HierarchyLevel {
    pub n: u32,
    pub generators: QuadraticSignature,
    /// `log2` of the algebra dimension (the generator count).
    pub log2_dim: u64,
    /// Algebra dimension when it fits in a `u64`.
    pub dim: Option<u64>,
    pub induced: Option<QuadraticSignature>,
}

/// Computes levels `1..=n_max` of the chain under a convention, feeding each
/// level's induced signature in as the next level's generator counts.
pub fn hierarchy_chain(
    n_max: u32,
    cfg: &ConventionConfig,
) -> Result<Vec<HierarchyLevel>, HierarchyError> {
    if n_max > MAX_CHAIN_LEVEL {
        return Err(HierarchyError::ChainBoundExceeded { requested: n_max });
    }
    let mut levels = Vec::new();
    let mut generators = QuadraticSignature {
        n_plus: 0,
        n_minus: 0,
    };
    for n in 1..=n_max {
        let k = generators.total();
        let induced = if k <= MAX_GENERATORS as u64 {
            let sig = Signature::from_counts(generators.n_plus, generators.n_minus)?;
            Some(induced_signature(&sig, cfg))
        } else {
            None
        };
        levels.push(HierarchyLevel {
            n,
            generators,
            log2_dim: k,
            dim: if k < 64 { Some(1u64 << k) } else { None },
            induced,
        });
        match induced {
            Some(next) => generators = next,
            None => break,
        }
    }
    Ok(levels)
}

/// Per-level comparison of a computed chain against [`REFERENCE_CHAIN`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelMatch {
    pub n: u32,
    /// Computed generator tuple, displayed under the convention's order.
    pub computed: (u64, u64),
    pub reference: (u64, u64),
    pub matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub cfg: ConventionConfig,
    pub levels: Vec<LevelMatch>,
    pub match_count: u32,
    pub first_mismatch: Option<u32>,
}

/// Compares the computed chain against the reference tuples under a
/// convention.
pub fn match_reference_chain(cfg: &ConventionConfig) -> Result<MatchReport, HierarchyError> {
    let chain = hierarchy_chain(MAX_CHAIN_LEVEL, cfg)?;
    let mut levels = Vec::new();
    let mut match_count = 0;
    let mut first_mismatch = None;
    for (level, &reference) in chain.iter().zip(REFERENCE_CHAIN.iter()) {
        let computed = level.generators.as_tuple(cfg.order);
        let matches = computed == reference;
        if matches {
            match_count += 1;
        } else if first_mismatch.is_none() {
            first_mismatch = Some(level.n);
        }
        levels.push(LevelMatch {
            n: level.n,
            computed,
            reference,
            matches,
        });
    }
    Ok(MatchReport {
        cfg: *cfg,
        levels,
        match_count,
        first_mismatch,
    })
}

/// Evaluates [`match_reference_chain`] for all 16 conventions, ranked by
/// match count (ties keep the enumeration order).
pub fn search_convention() -> Vec<MatchReport> {
    let mut reports: Vec<MatchReport> = ConventionConfig::all()
        .iter()
        .map(|cfg| match_reference_chain(cfg).expect("chain bound is static"))
        .collect();
    reports.sort_by_key(|r| std::cmp::Reverse(r.match_count));
    reports
}

/// One constructed level: a concrete signature whose generator `i`
/// corresponds to the blade with bit pattern `i` of the previous level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelAlgebra {
    pub n: u32,
    pub sig: Signature,
    pub induced: QuadraticSignature,
}

/// Levels 1..=n_max with their concrete signatures, supporting the vector
/// embedding of each level's algebra into the next level's generator space.
#[derive(Debug, Clone)]
pub struct HierarchyTower {
    cfg: ConventionConfig,
    levels: Vec<LevelAlgebra>,
}

impl HierarchyTower {
    pub fn build(n_max: u32, cfg: &ConventionConfig) -> Result<HierarchyTower, HierarchyError> {
        if n_max > MAX_TOWER_LEVEL {
            return Err(HierarchyError::TowerBoundExceeded { requested: n_max });
        }
        let mut levels = Vec::new();
        let mut sig = Signature::empty();
        for n in 1..=n_max {
            let induced = induced_signature(&sig, cfg);
            levels.push(LevelAlgebra {
                n,
                sig: sig.clone(),
                induced,
            });
            if n < n_max {
                // generator i of the next level corresponds to blade i here
                sig = Signature::from_signs_iter(
                    (0..sig.blade_count())
                        .map(|bits| generator_square(Blade::from_bits(bits as u32), &sig, cfg)),
                )?;
            }
        }
        Ok(HierarchyTower { cfg: *cfg, levels })
    }

    pub fn cfg(&self) -> &ConventionConfig {
        &self.cfg
    }

    pub fn levels(&self) -> &[LevelAlgebra] {
        &self.levels
    }

    pub fn level(&self, n: u32) -> Result<&LevelAlgebra, HierarchyError> {
        self.levels
            .get(n.wrapping_sub(1) as usize)
            .ok_or(HierarchyError::LevelNotConstructed {
                requested: n,
                available: self.levels.len() as u32,
            })
    }

    /// The grade-1 image in level `n + 1` of a multivector of level `n`: the
    /// coefficient of blade `b` becomes the coefficient of generator number
    /// `b`. Under conventions where the embedding is isometric this preserves
    /// the norm form exactly.
    pub fn iota_embed<R: Ring>(
        &self,
        x: &Multivector<R>,
        from_level: u32,
    ) -> Result<Multivector<R>, HierarchyError> {
        let from = self.level(from_level)?;
        let to = self.level(from_level + 1)?;
        if x.sig() != &from.sig {
            return Err(HierarchyError::SignatureMismatch);
        }
        Ok(Multivector::from_terms(
            &to.sig,
            x.terms()
                .map(|(blade, c)| (Blade::generator(blade.bits()), c.clone())),
        )?)
    }
}
