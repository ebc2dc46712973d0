//! Single checkable instances with their evidence, convertible to and from
//! the named text inputs stored in failure witnesses.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::AlgebraElement;
use crate::centralizer::{centralizer_basis, homogeneous_commutant, GradedBasis};
use crate::cli::{parse_element, parse_word};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::monoid::{left_factorizations, Alphabet, Word};
use crate::verify::campaign::Lemma;
use crate::verify::lemmas::{
    additivity_on, commutant_proportionality_on, factorization_on, leading_proportionality_on,
    prefix_suffix_transfer_on, product_support_on, purity_profile_on,
};
use crate::verify::report::{CheckReport, Outcome};
use crate::verify::commutativity::commutativity_on;

/// One instance of a checked statement together with the evidence the
/// checker inspects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Factorization {
        u: Word,
        n: usize,
        pairs: Vec<(Word, Word)>,
    },
    ProductSupport {
        a: AlgebraElement,
        b: AlgebraElement,
        x: Word,
        y: Word,
        supp_ab: BTreeSet<Word>,
    },
    PrefixSuffix {
        a: AlgebraElement,
        b: AlgebraElement,
        v0: Word,
        supp_a: BTreeSet<Word>,
        supp_b: BTreeSet<Word>,
    },
    LeadingProportionality {
        a: AlgebraElement,
        b: AlgebraElement,
        lt_a: AlgebraElement,
        lt_b: AlgebraElement,
    },
    PurityProfile {
        a: AlgebraElement,
        b: AlgebraElement,
        supp_a: BTreeSet<Word>,
        supp_b: BTreeSet<Word>,
    },
    Commutant {
        a: AlgebraElement,
        basis: Vec<AlgebraElement>,
    },
    Additivity {
        a: AlgebraElement,
        b: AlgebraElement,
        ab: AlgebraElement,
    },
    Commutativity {
        basis: GradedBasis,
        /// Extra element appended to the computed basis.
        injected: Option<AlgebraElement>,
    },
}

impl Instance {
    pub fn factorization(u: &Word, n: usize) -> Result<Instance> {
        Ok(Instance::Factorization {
            u: u.clone(),
            n,
            pairs: left_factorizations(u, n)?,
        })
    }

    pub fn product_support(a: &AlgebraElement, b: &AlgebraElement, x: &Word, y: &Word) -> Result<Instance> {
        Ok(Instance::ProductSupport {
            supp_ab: a.multiply(b)?.support(),
            a: a.clone(),
            b: b.clone(),
            x: x.clone(),
            y: y.clone(),
        })
    }

    pub fn prefix_suffix(a: &AlgebraElement, b: &AlgebraElement, v0: &Word) -> Instance {
        Instance::PrefixSuffix {
            a: a.clone(),
            b: b.clone(),
            v0: v0.clone(),
            supp_a: a.support(),
            supp_b: b.support(),
        }
    }

    pub fn leading_proportionality(a: &AlgebraElement, b: &AlgebraElement) -> Instance {
        Instance::LeadingProportionality {
            a: a.clone(),
            b: b.clone(),
            lt_a: a.leading_term(),
            lt_b: b.leading_term(),
        }
    }

    pub fn purity_profile(a: &AlgebraElement, b: &AlgebraElement) -> Instance {
        Instance::PurityProfile {
            a: a.clone(),
            b: b.clone(),
            supp_a: a.support(),
            supp_b: b.support(),
        }
    }

    pub fn commutant(a: &AlgebraElement) -> Result<Instance> {
        let n = a.total_degree().finite().ok_or(Error::ZeroElement)?;
        Ok(Instance::Commutant {
            a: a.clone(),
            basis: homogeneous_commutant(a, n)?,
        })
    }

    pub fn additivity(a: &AlgebraElement, b: &AlgebraElement) -> Result<Instance> {
        Ok(Instance::Additivity {
            ab: a.multiply(b)?,
            a: a.clone(),
            b: b.clone(),
        })
    }

    pub fn commutativity(u: &AlgebraElement, max_degree: usize) -> Result<Instance> {
        Ok(Instance::Commutativity {
            basis: centralizer_basis(u, max_degree)?,
            injected: None,
        })
    }

    pub fn lemma(&self) -> Lemma {
        match self {
            Instance::Factorization { .. } => Lemma::Factorization,
            Instance::ProductSupport { .. } => Lemma::ProductSupport,
            Instance::PrefixSuffix { .. } => Lemma::PrefixSuffix,
            Instance::LeadingProportionality { .. } => Lemma::LeadingProportionality,
            Instance::PurityProfile { .. } => Lemma::PurityProfile,
            Instance::Commutant { .. } => Lemma::CommutantProportionality,
            Instance::Additivity { .. } => Lemma::DegreeAdditivity,
            Instance::Commutativity { .. } => Lemma::Commutativity,
        }
    }

    pub fn check(&self) -> Result<Outcome> {
        match self {
            Instance::Factorization { u, n, pairs } => Ok(factorization_on(u, *n, pairs)),
            Instance::ProductSupport { a, b, x, y, supp_ab } => Ok(product_support_on(a, b, x, y, supp_ab)),
            Instance::PrefixSuffix { a, b, v0, supp_a, supp_b } => {
                prefix_suffix_transfer_on(a, b, v0, supp_a, supp_b)
            }
            Instance::LeadingProportionality { a, b, lt_a, lt_b } => leading_proportionality_on(a, b, lt_a, lt_b),
            Instance::PurityProfile { a, b, supp_a, supp_b } => purity_profile_on(a, b, supp_a, supp_b),
            Instance::Commutant { a, basis } => commutant_proportionality_on(a, basis),
            Instance::Additivity { a, b, ab } => additivity_on(a, b, ab),
            Instance::Commutativity { basis, injected } => match injected {
                None => commutativity_on(basis),
                Some(e) => {
                    let mut gb = basis.clone();
                    gb.cumulative.push(e.clone());
                    commutativity_on(&gb)
                }
            },
        }
    }

    /// Alphabet and field of the elements involved; factorization
    /// instances involve words only.
    fn ring(&self) -> Option<(&Arc<Alphabet>, FieldSpec)> {
        let e = match self {
            Instance::Factorization { .. } => return None,
            Instance::ProductSupport { a, .. }
            | Instance::PrefixSuffix { a, .. }
            | Instance::LeadingProportionality { a, .. }
            | Instance::PurityProfile { a, .. }
            | Instance::Commutant { a, .. }
            | Instance::Additivity { a, .. } => a,
            Instance::Commutativity { basis, .. } => &basis.u,
        };
        Some((e.alphabet(), e.field()))
    }

    /// Named text inputs; [`Instance::from_inputs`] inverts this.
    pub fn inputs(&self) -> Vec<(String, String)> {
        let mut out: Vec<(String, String)> = Vec::new();
        let mut put = |k: &str, v: String| out.push((k.to_string(), v));
        match self.ring() {
            Some((alphabet, field)) => {
                put("nx", alphabet.num_noncommuting().to_string());
                put("ny", alphabet.num_commuting().to_string());
                put("field", field.to_string());
            }
            None => {
                // Smallest standard alphabet containing every letter used.
                let mut nx = 0;
                let mut ny = 0;
                if let Instance::Factorization { u, pairs, .. } = self {
                    let words = std::iter::once(u).chain(pairs.iter().flat_map(|(v, w)| [v, w]));
                    for l in words.flat_map(Word::letters) {
                        let n = if l.is_commuting() { &mut ny } else { &mut nx };
                        *n = (*n).max(l.index() + 1);
                    }
                }
                put("nx", nx.to_string());
                put("ny", ny.to_string());
            }
        }
        match self {
            Instance::Factorization { u, n, pairs } => {
                put("u", u.to_string());
                put("n", n.to_string());
                let items: Vec<String> = pairs.iter().map(|(v, w)| format!("{v} / {w}")).collect();
                put("pairs", items.join("; "));
            }
            Instance::ProductSupport { a, b, x, y, supp_ab } => {
                put("a", a.to_string());
                put("b", b.to_string());
                put("x", x.to_string());
                put("y", y.to_string());
                put("supp_ab", words_text(supp_ab));
            }
            Instance::PrefixSuffix { a, b, v0, supp_a, supp_b } => {
                put("a", a.to_string());
                put("b", b.to_string());
                put("v0", v0.to_string());
                put("supp_a", words_text(supp_a));
                put("supp_b", words_text(supp_b));
            }
            Instance::LeadingProportionality { a, b, lt_a, lt_b } => {
                put("a", a.to_string());
                put("b", b.to_string());
                put("lt_a", lt_a.to_string());
                put("lt_b", lt_b.to_string());
            }
            Instance::PurityProfile { a, b, supp_a, supp_b } => {
                put("a", a.to_string());
                put("b", b.to_string());
                put("supp_a", words_text(supp_a));
                put("supp_b", words_text(supp_b));
            }
            Instance::Commutant { a, basis } => {
                put("a", a.to_string());
                put("basis", elements_text(basis));
            }
            Instance::Additivity { a, b, ab } => {
                put("a", a.to_string());
                put("b", b.to_string());
                put("ab", ab.to_string());
            }
            Instance::Commutativity { basis, injected } => {
                put("u", basis.u.to_string());
                put("max_degree", basis.max_degree.to_string());
                if let Some(e) = injected {
                    put("injected", e.to_string());
                }
            }
        }
        out
    }

    /// Rebuilds an instance of `lemma` from witness inputs. Commutativity
    /// instances recompute the centralizer basis.
    pub fn from_inputs(lemma: Lemma, inputs: &[(String, String)]) -> Result<Instance> {
        let get = |key: &str| -> Result<&str> {
            inputs
                .iter()
                .find(|(k, _)| k == key)
                .map(|(_, v)| v.as_str())
                .ok_or_else(|| Error::Config(format!("witness lacks input `{key}`")))
        };
        let num = |key: &str| -> Result<usize> {
            get(key)?
                .parse()
                .map_err(|_| Error::Config(format!("input `{key}` is not a number")))
        };
        let alphabet = Arc::new(Alphabet::standard(num("nx")?, num("ny")?));
        let word = |key: &str| parse_word(&alphabet, get(key)?);
        if lemma == Lemma::Factorization {
            let text = get("pairs")?;
            let pairs = split(text, ';')
                .map(|p| {
                    let (v, w) = p
                        .split_once('/')
                        .ok_or_else(|| Error::Config(format!("bad pair `{p}`")))?;
                    Ok((parse_word(&alphabet, v)?, parse_word(&alphabet, w)?))
                })
                .collect::<Result<_>>()?;
            return Ok(Instance::Factorization {
                u: word("u")?,
                n: num("n")?,
                pairs,
            });
        }
        let field: FieldSpec = get("field")?.parse()?;
        let elem = |key: &str| parse_element(&alphabet, field, get(key)?);
        let words = |key: &str| -> Result<BTreeSet<Word>> {
            split(get(key)?, ',').map(|w| parse_word(&alphabet, w)).collect()
        };
        Ok(match lemma {
            Lemma::Factorization => unreachable!(),
            Lemma::ProductSupport => Instance::ProductSupport {
                a: elem("a")?,
                b: elem("b")?,
                x: word("x")?,
                y: word("y")?,
                supp_ab: words("supp_ab")?,
            },
            Lemma::PrefixSuffix => Instance::PrefixSuffix {
                a: elem("a")?,
                b: elem("b")?,
                v0: word("v0")?,
                supp_a: words("supp_a")?,
                supp_b: words("supp_b")?,
            },
            Lemma::LeadingProportionality => Instance::LeadingProportionality {
                a: elem("a")?,
                b: elem("b")?,
                lt_a: elem("lt_a")?,
                lt_b: elem("lt_b")?,
            },
            Lemma::PurityProfile => Instance::PurityProfile {
                a: elem("a")?,
                b: elem("b")?,
                supp_a: words("supp_a")?,
                supp_b: words("supp_b")?,
            },
            Lemma::CommutantProportionality => Instance::Commutant {
                a: elem("a")?,
                basis: split(get("basis")?, ';')
                    .map(|e| parse_element(&alphabet, field, e))
                    .collect::<Result<_>>()?,
            },
            Lemma::DegreeAdditivity => Instance::Additivity {
                a: elem("a")?,
                b: elem("b")?,
                ab: elem("ab")?,
            },
            Lemma::Commutativity => Instance::Commutativity {
                basis: centralizer_basis(&elem("u")?, num("max_degree")?)?,
                injected: match inputs.iter().any(|(k, _)| k == "injected") {
                    true => Some(elem("injected")?),
                    false => None,
                },
            },
        })
    }
}

fn split(text: &str, sep: char) -> impl Iterator<Item = &str> {
    text.split(sep).map(str::trim).filter(|s| !s.is_empty())
}

fn words_text(words: &BTreeSet<Word>) -> String {
    words.iter().map(Word::to_string).collect::<Vec<_>>().join(", ")
}

fn elements_text(elements: &[AlgebraElement]) -> String {
    elements.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; ")
}

/// Re-checks a failure witness of `lemma`.
pub fn replay(lemma: Lemma, inputs: &[(String, String)]) -> Result<Outcome> {
    Instance::from_inputs(lemma, inputs)?.check()
}

/// Runs one instance as a one-trial report.
pub fn check_instance(instance: &Instance) -> Result<CheckReport> {
    let mut report = CheckReport::new(instance.lemma().name());
    report.record(0, instance.check()?, || instance.inputs());
    Ok(report)
}

pub fn check_factorization_lemma(u: &Word, n: usize) -> Result<CheckReport> {
    check_instance(&Instance::factorization(u, n)?)
}

pub fn check_product_support(a: &AlgebraElement, b: &AlgebraElement, x: &Word, y: &Word) -> Result<CheckReport> {
    check_instance(&Instance::product_support(a, b, x, y)?)
}

pub fn check_prefix_suffix_transfer(a: &AlgebraElement, b: &AlgebraElement, v0: &Word) -> Result<CheckReport> {
    check_instance(&Instance::prefix_suffix(a, b, v0))
}

pub fn check_leading_proportionality(a: &AlgebraElement, b: &AlgebraElement) -> Result<CheckReport> {
    check_instance(&Instance::leading_proportionality(a, b))
}

pub fn check_purity_profile(a: &AlgebraElement, b: &AlgebraElement) -> Result<CheckReport> {
    check_instance(&Instance::purity_profile(a, b))
}

/// Computes the centralizer of `u` up to `max_degree` and checks that it is
/// commutative, with the graded-dimension consequences.
pub fn check_theorem(u: &AlgebraElement, max_degree: usize) -> Result<CheckReport> {
    check_instance(&Instance::commutativity(u, max_degree)?)
}
