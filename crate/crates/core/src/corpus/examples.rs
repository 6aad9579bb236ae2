use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::baer::{
    baer_decomposition, check_no_coprime_splitting, check_theorem_f_equivalence, inheritance_violations, is_baer,
    is_p_baer, unique_primes, Locus,
};
use crate::constructions::{cyclic, dihedral, direct_product, frobenius, semilinear, symmetric, wreath, WreathAction};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;
use crate::primes::classify_prime_power;
use crate::spec::parse_words;
use crate::structure::{is_normal, join, o_p, sylow, Factorisation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ExampleId {
    E3_8,
    E4_3i,
    E4_3ii,
    F1,
    F2,
    F3,
}

impl ExampleId {
    pub const ALL: [ExampleId; 6] =
        [ExampleId::E3_8, ExampleId::E4_3i, ExampleId::E4_3ii, ExampleId::F1, ExampleId::F2, ExampleId::F3];

    pub fn as_str(&self) -> &'static str {
        match self {
            ExampleId::E3_8 => "E3.8",
            ExampleId::E4_3i => "E4.3i",
            ExampleId::E4_3ii => "E4.3ii",
            ExampleId::F1 => "F1",
            ExampleId::F2 => "F2",
            ExampleId::F3 => "F3",
        }
    }
}

impl fmt::Display for ExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ExampleId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ExampleId> {
        ExampleId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::invalid(format!("unknown example '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// Taken from the published statement of the example.
    Paper,
    /// Computed independently by brute force.
    Computed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fact", rename_all = "kebab-case")]
pub enum Fact {
    GroupOrder {
        order: String,
    },
    Degree {
        degree: usize,
    },
    FactorOrders {
        a: u64,
        b: u64,
    },
    /// The nontrivial indices in `G` of the `p`-elements of one factor.
    FactorIndices {
        p: u64,
        locus: Locus,
        indices: Vec<u64>,
    },
    /// The nontrivial indices in `G` of all `p`-elements of `G`.
    GroupIndices {
        p: u64,
        indices: Vec<u64>,
    },
    PBaer {
        p: u64,
        holds: bool,
    },
    Baer {
        holds: bool,
    },
    TrivialFactorisationBaer {
        holds: bool,
    },
    /// The primes `q`, `r` after an absent side takes the other side's prime.
    UniquePrimes {
        p: u64,
        q: u64,
        r: u64,
    },
    /// `P O_q(G)` is not normal for `P` a Sylow `p`-subgroup.
    SylowRadicalNotNormal {
        p: u64,
        q: u64,
    },
    /// A `p`-element outside `A ∪ B` with the given index.
    IndexOutsideFactors {
        p: u64,
        index: u64,
    },
    /// `|G : C_G(O_p(G))|`.
    RadicalCentraliserIndex {
        p: u64,
        index: u64,
    },
    /// Whether `|G : C_G(A_p)|`, `|G : C_G(B_p)|` are prime powers for all `p`.
    CentraliserPredicate {
        holds: bool,
    },
    CentraliserEquivalence,
    /// A `p`-element `x` of a factor with `i_X(x)` and `i_G(x)` as given.
    InheritanceCounterexample {
        p: u64,
        factor_index: u64,
        group_index: u64,
    },
    NoCoprimeSplitting {
        holds: bool,
    },
    /// Prime blocks of the Baer decomposition of the factor `A`.
    FactorADecomposition {
        blocks: Vec<Vec<u64>>,
    },
    MaterializationRefused,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedFact {
    pub fact: Fact,
    pub source: Source,
}

pub struct NamedExample {
    pub id: ExampleId,
    pub description: String,
    pub group: Group,
    /// Absent when the group is too large to check `G = AB`.
    pub factorisation: Option<Factorisation>,
    pub expected: Vec<ExpectedFact>,
}

fn fact(fact: Fact, source: Source) -> ExpectedFact {
    ExpectedFact { fact, source }
}

/// `G = X × Y` with `A`, `B` the two direct factors.
fn product_factorisation(x: &Group, y: &Group) -> Result<Factorisation> {
    let g = direct_product(&[x.clone(), y.clone()])?;
    let nx = x.direct_factors().map_or(1, |f| f.len());
    let ny = y.direct_factors().map_or(1, |f| f.len());
    let a = g.direct_factor_subgroup(&(0..nx).collect::<Vec<_>>())?;
    let b = g.direct_factor_subgroup(&(nx..nx + ny).collect::<Vec<_>>())?;
    Factorisation::new(g, a, b)
}

pub fn build_example(id: ExampleId) -> Result<NamedExample> {
    use Source::{Computed, Paper};
    let ex = match id {
        ExampleId::E3_8 => {
            let f = product_factorisation(&symmetric(3)?, &dihedral(10)?)?;
            NamedExample {
                id,
                description: "Sym(3) x D10 with A = Sym(3), B = D10".into(),
                group: f.group().clone(),
                factorisation: Some(f),
                expected: vec![
                    fact(Fact::GroupOrder { order: "60".into() }, Computed),
                    fact(Fact::FactorIndices { p: 2, locus: Locus::A, indices: vec![3] }, Paper),
                    fact(Fact::FactorIndices { p: 2, locus: Locus::B, indices: vec![5] }, Paper),
                    fact(Fact::PBaer { p: 2, holds: true }, Paper),
                    fact(Fact::UniquePrimes { p: 2, q: 3, r: 5 }, Paper),
                    fact(Fact::SylowRadicalNotNormal { p: 2, q: 3 }, Paper),
                    fact(Fact::SylowRadicalNotNormal { p: 2, q: 5 }, Paper),
                ],
            }
        }
        ExampleId::E4_3i => {
            let a = direct_product(&[cyclic(3)?, frobenius(7, 2)?, frobenius(11, 5)?])?;
            let b = direct_product(&[cyclic(5)?, frobenius(7, 3)?, frobenius(11, 2)?])?;
            let f = product_factorisation(&a, &b)?;
            NamedExample {
                id,
                description: "(C3 x [C7]C2 x [C11]C5) x (C5 x [C7]C3 x [C11]C2)".into(),
                group: f.group().clone(),
                factorisation: Some(f),
                expected: vec![
                    fact(Fact::GroupOrder { order: "5336100".into() }, Computed),
                    fact(Fact::Degree { degree: 44 }, Computed),
                    fact(Fact::Baer { holds: true }, Paper),
                    fact(Fact::NoCoprimeSplitting { holds: true }, Paper),
                    fact(Fact::FactorADecomposition { blocks: vec![vec![2, 7], vec![3], vec![5, 11]] }, Computed),
                ],
            }
        }
        ExampleId::E4_3ii => {
            let h = symmetric(3)?;
            let k = dihedral(10)?;
            let g = direct_product(&[h.clone(), k.clone()])?;
            let degree = g.degree();
            let lift = |x: &Permutation| x.shifted(3, degree);
            let k2 = sylow(&k, 2)?.generators()?;
            let k5 = sylow(&k, 5)?.generators()?;
            let a = g.subgroup_generated(&k2.iter().map(lift).collect::<Vec<_>>())?;
            let mut bgens: Vec<Permutation> = h.generators().iter().map(|x| x.shifted(0, degree)).collect();
            bgens.extend(k5.iter().map(lift));
            let b = g.subgroup_generated(&bgens)?;
            NamedExample {
                id,
                description: "Sym(3) x D10 with A = Syl2(D10), B = Sym(3) x C5".into(),
                factorisation: Some(Factorisation::new(g.clone(), a, b)?),
                group: g,
                expected: vec![
                    fact(Fact::FactorOrders { a: 2, b: 30 }, Computed),
                    fact(Fact::Baer { holds: true }, Paper),
                    fact(Fact::IndexOutsideFactors { p: 2, index: 15 }, Paper),
                    fact(Fact::TrivialFactorisationBaer { holds: false }, Paper),
                    fact(Fact::CentraliserEquivalence, Computed),
                ],
            }
        }
        ExampleId::F1 => {
            let g = semilinear(2, 3)?;
            let a = o_p(&g, 2)?;
            let b = crate::constructions::subgroup_from_words(&g, &parse_words("g1, g2")?)?;
            NamedExample {
                id,
                description: "AGammaL(1,8) = [E8](C7C3) with A = E8, B of order 21".into(),
                factorisation: Some(Factorisation::new(g.clone(), a, b)?),
                group: g,
                expected: vec![
                    fact(Fact::GroupOrder { order: "168".into() }, Paper),
                    fact(Fact::FactorOrders { a: 8, b: 21 }, Paper),
                    fact(Fact::GroupIndices { p: 2, indices: vec![7] }, Paper),
                    fact(Fact::RadicalCentraliserIndex { p: 2, index: 21 }, Paper),
                    fact(Fact::PBaer { p: 2, holds: true }, Paper),
                    fact(Fact::UniquePrimes { p: 2, q: 7, r: 7 }, Paper),
                    fact(Fact::CentraliserPredicate { holds: false }, Paper),
                    fact(Fact::Baer { holds: false }, Computed),
                    fact(Fact::CentraliserEquivalence, Computed),
                ],
            }
        }
        ExampleId::F2 => {
            let g = semilinear(2, 3)?;
            let h = crate::constructions::subgroup_from_words(&g, &parse_words("g0, g1^-1*g0*g1, g2")?)?;
            let k = crate::constructions::subgroup_from_words(&g, &parse_words("g1")?)?;
            NamedExample {
                id,
                description: "AGammaL(1,8) = HK with |H| = 24, |K| = 7".into(),
                factorisation: Some(Factorisation::new(g.clone(), h, k)?),
                group: g,
                expected: vec![
                    fact(Fact::FactorOrders { a: 24, b: 7 }, Paper),
                    fact(Fact::PBaer { p: 2, holds: true }, Paper),
                    fact(Fact::InheritanceCounterexample { p: 2, factor_index: 3, group_index: 7 }, Paper),
                ],
            }
        }
        ExampleId::F3 => {
            let g = wreath(&cyclic(7)?, &semilinear(2, 3)?, WreathAction::Regular)?;
            NamedExample {
                id,
                description: "C7 wr AGammaL(1,8), regular action".into(),
                factorisation: None,
                expected: vec![
                    fact(Fact::Degree { degree: 1176 }, Computed),
                    fact(
                        Fact::GroupOrder { order: (num_bigint::BigUint::from(7u32).pow(168) * 168u32).to_string() },
                        Paper,
                    ),
                    fact(Fact::MaterializationRefused, Computed),
                ],
                group: g,
            }
        }
    };
    Ok(ex)
}

fn factorisation(ex: &NamedExample) -> Result<&Factorisation> {
    ex.factorisation.as_ref().ok_or_else(|| Error::invalid(format!("{} has no factorisation", ex.id)))
}

fn nontrivial_indices(g: &Group, elems: &[Permutation], p: u64) -> Result<Vec<u64>> {
    let mut out = BTreeSet::new();
    for x in elems {
        if x.order() > 1 && x.is_p_element(p) {
            out.insert(g.class_index(x)?);
        }
    }
    Ok(out.into_iter().filter(|&i| i > 1).collect())
}

/// Evaluates one expected fact against the example.
pub fn verify_fact(ex: &NamedExample, fact: &Fact) -> Result<bool> {
    let g = &ex.group;
    Ok(match fact {
        Fact::GroupOrder { order } => g.order_big()?.to_string() == *order,
        Fact::Degree { degree } => g.degree() == *degree,
        Fact::FactorOrders { a, b } => {
            let f = factorisation(ex)?;
            f.a().order()? == *a && f.b().order()? == *b
        }
        Fact::FactorIndices { p, locus, indices } => {
            let f = factorisation(ex)?;
            let x = if *locus == Locus::A { f.a() } else { f.b() };
            nontrivial_indices(g, &x.elements()?, *p)? == *indices
        }
        Fact::GroupIndices { p, indices } => nontrivial_indices(g, g.elements()?, *p)? == *indices,
        Fact::PBaer { p, holds } => is_p_baer(factorisation(ex)?, *p)?.is_p_baer == Some(*holds),
        Fact::Baer { holds } => is_baer(factorisation(ex)?)?.is_baer == *holds,
        Fact::TrivialFactorisationBaer { holds } => is_baer(&Factorisation::trivial(g.clone())?)?.is_baer == *holds,
        Fact::UniquePrimes { p, q, r } => unique_primes(factorisation(ex)?, *p)?.resolved() == (*q, *r),
        Fact::SylowRadicalNotNormal { p, q } => {
            let s = join(g, &[&sylow(g, *p)?, &o_p(g, *q)?])?;
            !is_normal(g, &s)?
        }
        Fact::IndexOutsideFactors { p, index } => {
            let f = factorisation(ex)?;
            let store = g.store()?;
            let classes = store.classes();
            (0..store.len() as u32).any(|x| {
                store.order_of(x) > 1
                    && classify_prime_power(store.order_of(x)).is_power_of(*p)
                    && !f.a().contains_id(x)
                    && !f.b().contains_id(x)
                    && classes.index_of(x) == *index
            })
        }
        Fact::RadicalCentraliserIndex { p, index } => {
            let c = g.centraliser(&o_p(g, *p)?.generators()?)?;
            g.order()? / c.order()? == *index
        }
        Fact::CentraliserPredicate { holds } => {
            let f = factorisation(ex)?;
            let r = check_theorem_f_equivalence(f)?;
            let baer = is_baer(f)?.is_baer;
            // the report passes exactly when the two predicates agree
            r.passed && baer == *holds
        }
        Fact::CentraliserEquivalence => check_theorem_f_equivalence(factorisation(ex)?)?.passed,
        Fact::InheritanceCounterexample { p, factor_index, group_index } => {
            let f = factorisation(ex)?;
            let want = format!("i_G = {group_index}, i_X = {factor_index}");
            inheritance_violations(f, Some(*p))?.iter().any(|v| v.ends_with(&want))
        }
        Fact::NoCoprimeSplitting { holds } => check_no_coprime_splitting(g)? == *holds,
        Fact::FactorADecomposition { blocks } => {
            let a = factorisation(ex)?.a().as_group()?;
            baer_decomposition(&a)?.is_some_and(|d| d.prime_partition == *blocks)
        }
        Fact::MaterializationRefused => matches!(g.store(), Err(Error::CapExceeded { .. })),
    })
}
