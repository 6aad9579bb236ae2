use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use baerlab_core::corpus::{build_example, ExampleId};
use baerlab_core::spec::parse_words;
use baerlab_core::{Factorisation, Group, GroupSpec, Subgroup};

/// A resolved group argument: a named example, an inline spec, or a file
/// holding either.
pub struct GroupInput {
    pub label: String,
    pub example: Option<ExampleId>,
    pub group: Group,
    default_factorisation: Option<Factorisation>,
}

pub fn resolve_group(arg: &str) -> Result<GroupInput> {
    if let Ok(id) = arg.parse::<ExampleId>() {
        let ex = build_example(id)?;
        return Ok(GroupInput {
            label: id.to_string(),
            example: Some(id),
            group: ex.group,
            default_factorisation: ex.factorisation,
        });
    }
    let looks_inline = arg.contains('(');
    if !looks_inline {
        let path = Path::new(arg);
        if !path.exists() {
            bail!("no such file, example or group spec: {arg}");
        }
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {arg}"))?;
        let line = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty())
            .ok_or_else(|| anyhow!("{arg}: no group spec found"))?;
        return resolve_group(line).with_context(|| format!("in {arg}"));
    }
    let spec = GroupSpec::parse(arg).with_context(|| format!("parsing '{arg}'"))?;
    Ok(GroupInput { label: spec.to_string(), example: None, group: spec.build()?, default_factorisation: None })
}

/// One side of `--factorisation`: `factor(i, ...)` for direct factors,
/// `trivial`, `whole`, or a comma-separated word list in the generators.
pub fn resolve_factor(g: &Group, text: &str) -> Result<Subgroup> {
    let t = text.trim();
    match t {
        "trivial" | "1" => return Ok(g.trivial_subgroup()?),
        "whole" | "G" => return Ok(g.whole()?),
        _ => {}
    }
    if let Some(inner) = t.strip_prefix("factor(").and_then(|r| r.strip_suffix(')')) {
        let idx = inner
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| anyhow!("bad factor index '{}'", s.trim())))
            .collect::<Result<Vec<_>>>()?;
        return Ok(g.direct_factor_subgroup(&idx)?);
    }
    let words = parse_words(t).with_context(|| format!("parsing factor '{t}'"))?;
    let gens = words.iter().map(|w| w.evaluate(g)).collect::<baerlab_core::Result<Vec<_>>>()?;
    Ok(g.subgroup_generated(&gens)?)
}

pub enum FactorisationChoice {
    Given(String, String),
    Trivial,
    Default,
}

impl FactorisationChoice {
    pub fn echo(&self, input: &GroupInput) -> (String, String) {
        match self {
            FactorisationChoice::Given(a, b) => (a.clone(), b.clone()),
            FactorisationChoice::Default if input.default_factorisation.is_some() => {
                (format!("{} A", input.label), format!("{} B", input.label))
            }
            _ => ("whole".into(), "whole".into()),
        }
    }
}

pub fn resolve_factorisation(input: &GroupInput, choice: &FactorisationChoice) -> Result<Factorisation> {
    match choice {
        FactorisationChoice::Given(a, b) => {
            let g = &input.group;
            Ok(Factorisation::new(g.clone(), resolve_factor(g, a)?, resolve_factor(g, b)?)?)
        }
        FactorisationChoice::Trivial => Ok(Factorisation::trivial(input.group.clone())?),
        FactorisationChoice::Default => match &input.default_factorisation {
            Some(f) => Ok(f.clone()),
            None if input.example.is_some() => {
                bail!("{} has no factorisation; pass --trivial-factorisation or --factorisation", input.label)
            }
            None => Ok(Factorisation::trivial(input.group.clone())?),
        },
    }
}
