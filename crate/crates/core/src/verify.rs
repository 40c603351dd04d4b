//! Executable checks for the centralizer-like-subgroup identities, plus a
//! catalog-driven counterexample search and a structural analyzer.
//!
//! Every equality check computes each side by its own defining scan from
//! the `sets` module; no check produces both sides of an equality through
//! the operation whose correctness it is judging.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, DEFAULT_ORDER_CAP};
use crate::report::{InstanceFlags, InstanceRecord, VerificationReport};
use crate::sets;
use crate::structure;
use crate::subset::{ElementSubset, Subgroup};
use crate::word::{eval_word, parse_word, Binding, WordExpr};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A checkable claim, optionally narrowed to one numbered part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClaimId {
    /// Three proved identities per element plus the per-element absorbed
    /// equality `E₁* = R₁` evaluated as a tested claim (part 4).
    Prop1(Option<u8>),
    /// Componentwise word evaluation over a direct product.
    Prop3,
    /// `R_n(G×H) = R_n(G) × R_n(H)`, universal (part 1) and per element
    /// (part 2).
    Thm4(Option<u8>),
    /// The two three-way equality chains per element of a product.
    Thm5(Option<u8>),
    /// Per-element `E₁* = R₁` (part 1) and normality plus `E₁* ⊆ *E₁`
    /// (part 2) over a product.
    Conj6(Option<u8>),
}

impl ClaimId {
    pub fn parse(text: &str) -> Result<Self> {
        let lower = text.to_ascii_lowercase();
        let claim = match lower.as_str() {
            "prop1" => ClaimId::Prop1(None),
            "prop1.1" => ClaimId::Prop1(Some(1)),
            "prop1.2" => ClaimId::Prop1(Some(2)),
            "prop1.3" => ClaimId::Prop1(Some(3)),
            "prop1.4" => ClaimId::Prop1(Some(4)),
            "prop3" => ClaimId::Prop3,
            "thm4" => ClaimId::Thm4(None),
            "thm4.1" => ClaimId::Thm4(Some(1)),
            "thm4.2" => ClaimId::Thm4(Some(2)),
            "thm5" => ClaimId::Thm5(None),
            "thm5.1" => ClaimId::Thm5(Some(1)),
            "thm5.2" => ClaimId::Thm5(Some(2)),
            "conj6" => ClaimId::Conj6(None),
            "conj6.1" => ClaimId::Conj6(Some(1)),
            "conj6.2" => ClaimId::Conj6(Some(2)),
            _ => return Err(Error::UnknownClaim(text.to_string())),
        };
        Ok(claim)
    }

    pub fn canonical(&self) -> String {
        let (family, part) = match self {
            ClaimId::Prop1(p) => ("prop1", *p),
            ClaimId::Prop3 => ("prop3", None),
            ClaimId::Thm4(p) => ("thm4", *p),
            ClaimId::Thm5(p) => ("thm5", *p),
            ClaimId::Conj6(p) => ("conj6", *p),
        };
        match part {
            Some(p) => format!("{family}.{p}"),
            None => family.to_string(),
        }
    }

    /// Prop 1 runs on single groups; everything else needs an ordered pair.
    pub fn takes_single_group(&self) -> bool {
        matches!(self, ClaimId::Prop1(_))
    }
}

fn wants(selected: Option<u8>, part: u8) -> bool {
    selected.is_none_or(|p| p == part)
}

/// A named group, the unit of catalogs and report records.
#[derive(Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub group: FiniteGroup,
}

impl CatalogEntry {
    pub fn new(name: impl Into<String>, group: FiniteGroup) -> Self {
        CatalogEntry {
            name: name.into(),
            group,
        }
    }
}

fn atomic_flags(g: &FiniteGroup) -> InstanceFlags {
    let (solvable, metabelian) = structure::product_flags(g);
    InstanceFlags {
        solvable,
        metabelian,
    }
}

fn pair_flags(g: &FiniteGroup, h: &FiniteGroup) -> InstanceFlags {
    let (gs, gm) = structure::product_flags(g);
    let (hs, hm) = structure::product_flags(h);
    InstanceFlags {
        solvable: gs && hs,
        metabelian: gm && hm,
    }
}

fn set_diff_witnesses(
    a_name: &str,
    a: &ElementSubset,
    b_name: &str,
    b: &ElementSubset,
    out: &mut Vec<String>,
) {
    let g = a.group();
    let only_a: Vec<&str> = a
        .members()
        .iter()
        .filter(|&&m| !b.contains(m))
        .map(|&m| g.label(m))
        .collect();
    if !only_a.is_empty() {
        out.push(format!(
            "in {a_name} but not {b_name}: {}",
            only_a.join(", ")
        ));
    }
    let only_b: Vec<&str> = b
        .members()
        .iter()
        .filter(|&&m| !a.contains(m))
        .map(|&m| g.label(m))
        .collect();
    if !only_b.is_empty() {
        out.push(format!(
            "in {b_name} but not {a_name}: {}",
            only_b.join(", ")
        ));
    }
}

/// Normality of a raw member set by conjugation scan; on failure, a witness
/// pair (member, conjugator) is reported.
fn normality_witness(g: &FiniteGroup, set: &ElementSubset) -> Option<String> {
    let mask = set.mask();
    for x in 0..g.order() {
        for &m in set.members() {
            if !mask[g.conj_idx(m, x)] {
                return Some(format!(
                    "conjugating {} by {} leaves the set (lands at {})",
                    g.label(m),
                    g.label(x),
                    g.label(g.conj_idx(m, x))
                ));
            }
        }
    }
    None
}

/// Runs the four parts of the first proposition over every element of one
/// group: `*E₁ = R₁ = C_G(g)`, `E₁* = ⋂R₁(g^x) = C_G(g^G)`, normality of
/// `E₁*` with `E₁* ⊆ *E₁`, and the tested equality `E₁* = R₁`. Each set
/// comes from its own scan.
pub fn check_prop1(entry: &CatalogEntry, claim: ClaimId) -> VerificationReport {
    let started = Instant::now();
    let ClaimId::Prop1(selected) = claim else {
        panic!("check_prop1 requires a prop1 claim");
    };
    let g = &entry.group;
    let flags = atomic_flags(g);
    let mut instances = Vec::with_capacity(g.order());
    for e in g.elements() {
        let left = sets::left_e1(&e);
        let r1 = sets::right_engel_set_at(&e, 1);
        let cz = sets::centralizer(&e);
        let e1star = sets::right_e1star(&e);
        let icr = sets::intersect_conjugate_r1(&e);
        let cnc = sets::centralizer_of_normal_closure(&e);

        let mut verdict = true;
        let mut witnesses = Vec::new();
        if wants(selected, 1) {
            if left != r1 {
                verdict = false;
                set_diff_witnesses("*E1", &left, "R1", &r1, &mut witnesses);
            }
            if r1 != *cz.as_subset() {
                verdict = false;
                set_diff_witnesses("R1", &r1, "C(g)", cz.as_subset(), &mut witnesses);
            }
        }
        if wants(selected, 2) {
            if e1star != icr {
                verdict = false;
                set_diff_witnesses("E1*", &e1star, "∩R1(g^x)", &icr, &mut witnesses);
            }
            if icr != *cnc.as_subset() {
                verdict = false;
                set_diff_witnesses("∩R1(g^x)", &icr, "C(g^G)", cnc.as_subset(), &mut witnesses);
            }
        }
        if wants(selected, 3) {
            if let Err(err) = Subgroup::new(e1star.clone()) {
                verdict = false;
                witnesses.push(format!("E1* is not a subgroup: {err}"));
            }
            if let Some(witness) = normality_witness(g, &e1star) {
                verdict = false;
                witnesses.push(format!("E1* is not normal: {witness}"));
            }
            if !e1star.is_subset_of(&left) {
                verdict = false;
                set_diff_witnesses("E1*", &e1star, "*E1", &left, &mut witnesses);
            }
        }
        if wants(selected, 4) && e1star != r1 {
            verdict = false;
            set_diff_witnesses("E1*", &e1star, "R1", &r1, &mut witnesses);
        }
        instances.push(InstanceRecord {
            groups: vec![entry.name.clone()],
            element: Some(e.label().to_string()),
            verdict: Some(verdict),
            witnesses,
            flags,
        });
    }
    VerificationReport::new(claim.canonical(), instances, started.elapsed())
}

/// [`check_prop1`] over several groups, merged into one report with the
/// instances in catalog order.
pub fn check_prop1_catalog(entries: &[CatalogEntry], claim: ClaimId) -> VerificationReport {
    let started = Instant::now();
    let mut instances = Vec::new();
    for entry in entries {
        instances.extend(check_prop1(entry, claim).instances);
    }
    VerificationReport::new(claim.canonical(), instances, started.elapsed())
}

fn encode_factor_sets(
    p: &FiniteGroup,
    left: &ElementSubset,
    right: &ElementSubset,
) -> ElementSubset {
    let members: Vec<usize> = left
        .members()
        .iter()
        .flat_map(|&i| {
            right
                .members()
                .iter()
                .map(move |&j| p.encode_pair(i, j).expect("product group"))
        })
        .collect();
    ElementSubset::new(p, members).expect("encoded members are in range")
}

/// Both parts of the right-Engel product identity for `n = 1..=n_max`:
/// the universal sets (part 1) and the element-relative sets (part 2),
/// with the product side and the factor sides computed independently.
pub fn check_theorem4(
    g_entry: &CatalogEntry,
    h_entry: &CatalogEntry,
    n_max: u32,
    claim: ClaimId,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let ClaimId::Thm4(selected) = claim else {
        panic!("check_theorem4 requires a thm4 claim");
    };
    let (g, h) = (&g_entry.group, &h_entry.group);
    let p = FiniteGroup::direct_product(g, h)?;
    let flags = pair_flags(g, h);
    let groups = vec![g_entry.name.clone(), h_entry.name.clone()];
    let mut instances = Vec::new();

    if wants(selected, 1) {
        let mut verdict = true;
        let mut witnesses = Vec::new();
        for n in 1..=n_max {
            let product_side = sets::right_engel_set(&p, n);
            let factor_side = encode_factor_sets(
                &p,
                &sets::right_engel_set(g, n),
                &sets::right_engel_set(h, n),
            );
            if product_side != factor_side {
                verdict = false;
                let mut diff = Vec::new();
                set_diff_witnesses(
                    "R_n(GxH)",
                    &product_side,
                    "R_n(G)xR_n(H)",
                    &factor_side,
                    &mut diff,
                );
                for d in diff {
                    witnesses.push(format!("n={n}: {d}"));
                }
            }
        }
        instances.push(InstanceRecord {
            groups: groups.clone(),
            element: None,
            verdict: Some(verdict),
            witnesses,
            flags,
        });
    }

    if wants(selected, 2) {
        for u in 0..g.order() {
            for v in 0..h.order() {
                let flat = p.encode_pair(u, v).expect("product group");
                let mut verdict = true;
                let mut witnesses = Vec::new();
                for n in 1..=n_max {
                    let product_side = sets::right_engel_set_at(&p.element(flat), n);
                    let factor_side = encode_factor_sets(
                        &p,
                        &sets::right_engel_set_at(&g.element(u), n),
                        &sets::right_engel_set_at(&h.element(v), n),
                    );
                    if product_side != factor_side {
                        verdict = false;
                        let mut diff = Vec::new();
                        set_diff_witnesses(
                            "R_n(GxH,(g,h))",
                            &product_side,
                            "R_n(G,g)xR_n(H,h)",
                            &factor_side,
                            &mut diff,
                        );
                        for d in diff {
                            witnesses.push(format!("n={n}: {d}"));
                        }
                    }
                }
                instances.push(InstanceRecord {
                    groups: groups.clone(),
                    element: Some(p.label(flat).to_string()),
                    verdict: Some(verdict),
                    witnesses,
                    flags,
                });
            }
        }
    }

    Ok(VerificationReport::new(
        claim.canonical(),
        instances,
        started.elapsed(),
    ))
}

/// The two three-way equality chains at every element of `G × H`:
/// `*E₁ = R₁ = C` (part 1) and `E₁* = ⋂R₁ = C(·^G)` (part 2), all six sets
/// computed independently.
pub fn check_theorem5(
    g_entry: &CatalogEntry,
    h_entry: &CatalogEntry,
    claim: ClaimId,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let ClaimId::Thm5(selected) = claim else {
        panic!("check_theorem5 requires a thm5 claim");
    };
    let p = FiniteGroup::direct_product(&g_entry.group, &h_entry.group)?;
    let flags = pair_flags(&g_entry.group, &h_entry.group);
    let groups = vec![g_entry.name.clone(), h_entry.name.clone()];
    let mut instances = Vec::with_capacity(p.order());
    for e in p.elements() {
        let mut verdict = true;
        let mut witnesses = Vec::new();
        if wants(selected, 1) {
            let left = sets::left_e1(&e);
            let r1 = sets::right_engel_set_at(&e, 1);
            let cz = sets::centralizer(&e);
            if left != r1 {
                verdict = false;
                set_diff_witnesses("*E1", &left, "R1", &r1, &mut witnesses);
            }
            if r1 != *cz.as_subset() {
                verdict = false;
                set_diff_witnesses("R1", &r1, "C", cz.as_subset(), &mut witnesses);
            }
        }
        if wants(selected, 2) {
            let e1star = sets::right_e1star(&e);
            let icr = sets::intersect_conjugate_r1(&e);
            let cnc = sets::centralizer_of_normal_closure(&e);
            if e1star != icr {
                verdict = false;
                set_diff_witnesses("E1*", &e1star, "∩R1", &icr, &mut witnesses);
            }
            if icr != *cnc.as_subset() {
                verdict = false;
                set_diff_witnesses("∩R1", &icr, "C(·^G)", cnc.as_subset(), &mut witnesses);
            }
        }
        instances.push(InstanceRecord {
            groups: groups.clone(),
            element: Some(e.label().to_string()),
            verdict: Some(verdict),
            witnesses,
            flags,
        });
    }
    Ok(VerificationReport::new(
        claim.canonical(),
        instances,
        started.elapsed(),
    ))
}

/// The open per-element questions on a product: `E₁* = R₁` (part 1), and
/// normality of `E₁*` plus `E₁* ⊆ *E₁` (part 2). Part 1 legitimately fails
/// on many products; the report records whatever the scans find.
pub fn check_conjecture6(
    g_entry: &CatalogEntry,
    h_entry: &CatalogEntry,
    claim: ClaimId,
) -> Result<VerificationReport> {
    let started = Instant::now();
    let ClaimId::Conj6(selected) = claim else {
        panic!("check_conjecture6 requires a conj6 claim");
    };
    let p = FiniteGroup::direct_product(&g_entry.group, &h_entry.group)?;
    let flags = pair_flags(&g_entry.group, &h_entry.group);
    let groups = vec![g_entry.name.clone(), h_entry.name.clone()];
    let mut instances = Vec::with_capacity(p.order());
    for e in p.elements() {
        let e1star = sets::right_e1star(&e);
        let mut verdict = true;
        let mut witnesses = Vec::new();
        if wants(selected, 1) {
            let r1 = sets::right_engel_set_at(&e, 1);
            if e1star != r1 {
                verdict = false;
                set_diff_witnesses("E1*", &e1star, "R1", &r1, &mut witnesses);
            }
        }
        if wants(selected, 2) {
            if let Err(err) = Subgroup::new(e1star.clone()) {
                verdict = false;
                witnesses.push(format!("E1* is not a subgroup: {err}"));
            }
            if let Some(witness) = normality_witness(&p, &e1star) {
                verdict = false;
                witnesses.push(format!("E1* is not normal: {witness}"));
            }
            let left = sets::left_e1(&e);
            if !e1star.is_subset_of(&left) {
                verdict = false;
                set_diff_witnesses("E1*", &e1star, "*E1", &left, &mut witnesses);
            }
        }
        instances.push(InstanceRecord {
            groups: groups.clone(),
            element: Some(e.label().to_string()),
            verdict: Some(verdict),
            witnesses,
            flags,
        });
    }
    Ok(VerificationReport::new(
        claim.canonical(),
        instances,
        started.elapsed(),
    ))
}

/// Words exercised by the componentwise-evaluation check. Up to three
/// variables, covering products, inverses, conjugation, and nested
/// commutators.
pub const PROP3_WORDS: [&str; 11] = [
    "x",
    "x * y",
    "x^-1",
    "x * y * z^-1",
    "x^y",
    "x^y^z",
    "[x, y]",
    "[x,_2 y]",
    "[x,_3 y]",
    "[x * y, z]",
    "[x, y^z]",
];

/// Bindings are exhausted for products of order ≤ 64; larger products get
/// this many deterministic samples per word.
pub const PROP3_EXHAUSTIVE_MAX_ORDER: usize = 64;
pub const PROP3_SAMPLES: usize = 10_000;

/// Componentwise evaluation over a direct product: every word evaluated on
/// paired arguments equals the pair of factor evaluations. One instance per
/// word; exhaustive over all bindings for small products, sampled above.
pub fn check_prop3(g_entry: &CatalogEntry, h_entry: &CatalogEntry) -> Result<VerificationReport> {
    let started = Instant::now();
    let (g, h) = (&g_entry.group, &h_entry.group);
    let p = FiniteGroup::direct_product(g, h)?;
    let flags = pair_flags(g, h);
    let groups = vec![g_entry.name.clone(), h_entry.name.clone()];
    let mut instances = Vec::new();
    for text in PROP3_WORDS {
        let word = parse_word(text).expect("builtin word parses");
        let vars = word.variables();
        let mut verdict = true;
        let mut witnesses = Vec::new();
        let mut check_assignment = |assignment: &[usize]| -> bool {
            match componentwise_mismatch(&word, &vars, assignment, &p, g, h) {
                None => true,
                Some(witness) => {
                    verdict = false;
                    witnesses.push(witness);
                    false
                }
            }
        };
        if p.order() <= PROP3_EXHAUSTIVE_MAX_ORDER {
            let mut assignment = vec![0usize; vars.len()];
            'outer: loop {
                if !check_assignment(&assignment) {
                    break;
                }
                // Odometer over the assignment digits.
                for digit in assignment.iter_mut() {
                    *digit += 1;
                    if *digit < p.order() {
                        continue 'outer;
                    }
                    *digit = 0;
                }
                break;
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x700d_5eed);
            for _ in 0..PROP3_SAMPLES {
                let assignment: Vec<usize> = (0..vars.len())
                    .map(|_| rng.gen_range(0..p.order()))
                    .collect();
                if !check_assignment(&assignment) {
                    break;
                }
            }
        }
        instances.push(InstanceRecord {
            groups: groups.clone(),
            element: Some(text.to_string()),
            verdict: Some(verdict),
            witnesses,
            flags,
        });
    }
    Ok(VerificationReport::new(
        "prop3".to_string(),
        instances,
        started.elapsed(),
    ))
}

/// Evaluates `word` over the product and over both factors under the
/// projected bindings; returns a witness string when the product value is
/// not the pair of factor values.
fn componentwise_mismatch(
    word: &WordExpr,
    vars: &[String],
    assignment: &[usize],
    p: &FiniteGroup,
    g: &FiniteGroup,
    h: &FiniteGroup,
) -> Option<String> {
    let mut env_p = Binding::new(p);
    let mut env_g = Binding::new(g);
    let mut env_h = Binding::new(h);
    for (name, &flat) in vars.iter().zip(assignment) {
        let (i, j) = p.decode_pair(flat).expect("product group");
        env_p.bind(name, &p.element(flat)).expect("same group");
        env_g.bind(name, &g.element(i)).expect("same group");
        env_h.bind(name, &h.element(j)).expect("same group");
    }
    let over_product = eval_word(word, &env_p).expect("all variables bound");
    let over_g = eval_word(word, &env_g).expect("all variables bound");
    let over_h = eval_word(word, &env_h).expect("all variables bound");
    let expected = p
        .encode_pair(over_g.index(), over_h.index())
        .expect("product group");
    if over_product.index() == expected {
        None
    } else {
        let binding: Vec<String> = vars
            .iter()
            .zip(assignment)
            .map(|(name, &flat)| format!("{name}={}", p.label(flat)))
            .collect();
        Some(format!(
            "at {}: product gives {}, factors give {}",
            binding.join(", "),
            over_product.label(),
            p.label(expected)
        ))
    }
}

/// Options for [`search_counterexamples`].
#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    /// Keep going after the first failing instance.
    pub exhaustive: bool,
    /// Engel depth bound for thm4 claims.
    pub n_max: u32,
    /// Pairs whose product order exceeds this are reported as skipped.
    pub order_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            exhaustive: false,
            n_max: 4,
            order_cap: DEFAULT_ORDER_CAP,
        }
    }
}

/// Runs a pair claim over every ordered pair from the catalog, smallest
/// product first, so the first failure is a minimal witness. Pairs over the
/// order cap are listed as skipped instances rather than dropped.
pub fn search_counterexamples(
    catalog: &[CatalogEntry],
    claim: ClaimId,
    options: SearchOptions,
) -> Result<VerificationReport> {
    let started = Instant::now();
    if claim.takes_single_group() {
        return Err(Error::UnknownClaim(format!(
            "`{}` is a single-group claim; the search runs pair claims",
            claim.canonical()
        )));
    }
    let mut pairs: Vec<(usize, usize)> = (0..catalog.len())
        .flat_map(|i| (0..catalog.len()).map(move |j| (i, j)))
        .collect();
    pairs.sort_by_key(|&(i, j)| (catalog[i].group.order() * catalog[j].group.order(), i, j));

    let mut instances = Vec::new();
    let mut stop = false;
    for (i, j) in pairs {
        if stop {
            break;
        }
        let (g_entry, h_entry) = (&catalog[i], &catalog[j]);
        let product_order = g_entry.group.order() * h_entry.group.order();
        if product_order > options.order_cap {
            instances.push(InstanceRecord {
                groups: vec![g_entry.name.clone(), h_entry.name.clone()],
                element: None,
                verdict: None,
                witnesses: vec![format!(
                    "skipped: product order {product_order} exceeds cap {}",
                    options.order_cap
                )],
                flags: pair_flags(&g_entry.group, &h_entry.group),
            });
            continue;
        }
        let sub_report = match claim {
            ClaimId::Thm4(_) => check_theorem4(g_entry, h_entry, options.n_max, claim)?,
            ClaimId::Thm5(_) => check_theorem5(g_entry, h_entry, claim)?,
            ClaimId::Conj6(_) => check_conjecture6(g_entry, h_entry, claim)?,
            ClaimId::Prop3 => check_prop3(g_entry, h_entry)?,
            ClaimId::Prop1(_) => unreachable!("rejected above"),
        };
        if !options.exhaustive && !sub_report.all_held() {
            stop = true;
        }
        instances.extend(sub_report.instances);
    }
    Ok(VerificationReport::new(
        claim.canonical(),
        instances,
        started.elapsed(),
    ))
}

/// Structural profile of one group.
#[derive(Clone, Debug, Serialize)]
pub struct StructureSummary {
    pub name: String,
    pub order: usize,
    pub abelian: bool,
    pub solvable: bool,
    pub metabelian: bool,
    pub derived_series_orders: Vec<usize>,
    pub center_order: usize,
    pub center: Vec<String>,
    pub normal_subgroup_count: Option<usize>,
}

/// Order, commutativity flags, derived series, center, and (within the
/// enumeration cap) the normal subgroup count.
pub fn analyze_group(entry: &CatalogEntry) -> StructureSummary {
    let g = &entry.group;
    let series = structure::derived_series(g);
    let center = structure::center(g);
    let normal_subgroup_count = structure::enumerate_normal_subgroups(g)
        .ok()
        .map(|normals| normals.len());
    StructureSummary {
        name: entry.name.clone(),
        order: g.order(),
        abelian: structure::is_abelian(g),
        solvable: structure::is_solvable(g),
        metabelian: structure::is_metabelian(g),
        derived_series_orders: series.iter().map(|s| s.order()).collect(),
        center_order: center.order(),
        center: center.labels().iter().map(|l| l.to_string()).collect(),
        normal_subgroup_count,
    }
}

impl StructureSummary {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("summary serialization is infallible")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("group: {}\n", self.name));
        out.push_str(&format!("order: {}\n", self.order));
        out.push_str(&format!("abelian: {}\n", self.abelian));
        out.push_str(&format!("solvable: {}\n", self.solvable));
        out.push_str(&format!("metabelian: {}\n", self.metabelian));
        out.push_str(&format!(
            "derived series orders: {}\n",
            self.derived_series_orders
                .iter()
                .map(|o| o.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ));
        out.push_str(&format!(
            "center (order {}): {}\n",
            self.center_order,
            self.center.join(", ")
        ));
        match self.normal_subgroup_count {
            Some(count) => out.push_str(&format!("normal subgroups: {count}\n")),
            None => out.push_str("normal subgroups: not enumerated (order above cap)\n"),
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::catalog;

    fn entry(name: &str) -> CatalogEntry {
        CatalogEntry::new(name, catalog(name).unwrap())
    }

    #[test]
    fn claim_ids_round_trip() {
        for text in [
            "prop1", "prop1.1", "prop1.2", "prop1.3", "prop1.4", "prop3", "thm4", "thm4.1",
            "thm4.2", "thm5", "thm5.1", "thm5.2", "conj6", "conj6.1", "conj6.2",
        ] {
            assert_eq!(ClaimId::parse(text).unwrap().canonical(), text);
        }
        assert!(ClaimId::parse("thm6").is_err());
    }

    #[test]
    fn prop1_on_trivial_and_abelian_groups() {
        for name in ["trivial", "K4"] {
            let report = check_prop1(&entry(name), ClaimId::Prop1(None));
            assert!(report.all_held(), "{name}: {}", report.render_text());
        }
    }

    #[test]
    fn prop1_part4_fails_on_s3_transpositions() {
        let report = check_prop1(&entry("S3"), ClaimId::Prop1(Some(4)));
        assert!(!report.all_held());
        let swap = report
            .instances
            .iter()
            .find(|i| i.element.as_deref() == Some("(1 2)"))
            .unwrap();
        assert_eq!(swap.verdict, Some(false));
        assert!(!swap.witnesses.is_empty());

        // Parts 1–3 are proved; they hold everywhere on S3.
        for part in 1..=3 {
            let report = check_prop1(&entry("S3"), ClaimId::Prop1(Some(part)));
            assert!(report.all_held(), "part {part}");
        }
    }

    #[test]
    fn theorem4_examples() {
        let report = check_theorem4(&entry("K4"), &entry("S3"), 4, ClaimId::Thm4(None)).unwrap();
        assert!(report.all_held());
        // One universal instance plus 24 per-element instances.
        assert_eq!(report.instances.len(), 25);

        let trivial = CatalogEntry::new("trivial", catalog("trivial").unwrap());
        let report = check_theorem4(&entry("S3"), &trivial, 3, ClaimId::Thm4(None)).unwrap();
        assert!(report.all_held());

        let report = check_theorem4(&entry("C2"), &entry("C2"), 4, ClaimId::Thm4(None)).unwrap();
        assert!(report.all_held());
        for instance in &report.instances {
            assert!(instance.witnesses.is_empty());
        }
    }

    #[test]
    fn theorem5_examples() {
        let report = check_theorem5(&entry("K4"), &entry("S3"), ClaimId::Thm5(None)).unwrap();
        assert!(report.all_held());

        let report = check_theorem5(&entry("C3"), &entry("C4"), ClaimId::Thm5(None)).unwrap();
        assert!(report.all_held());

        // S3 × S3 at ((1 2),(1 2)): chain 1 has order 4, chain 2 is trivial.
        let s3 = catalog("S3").unwrap();
        let p = FiniteGroup::direct_product(&s3, &s3).unwrap();
        let e = p.by_label("((1 2),(1 2))").unwrap();
        let chain1 = sets::centralizer(&e);
        assert_eq!(chain1.order(), 4);
        let chain2 = sets::centralizer_of_normal_closure(&e);
        assert_eq!(chain2.order(), 1);
        let report = check_theorem5(&entry("S3"), &entry("S3"), ClaimId::Thm5(None)).unwrap();
        assert!(report.all_held());
    }

    #[test]
    fn conjecture6_on_k4xs3_and_s3xc2() {
        let report = check_conjecture6(&entry("K4"), &entry("S3"), ClaimId::Conj6(None)).unwrap();
        let golden = report
            .instances
            .iter()
            .find(|i| i.element.as_deref() == Some("(c,(1 3 2))"))
            .unwrap();
        assert_eq!(golden.verdict, Some(true));

        // Part 1 fails at ((1 2),1) in S3 × C2; part 2 still holds there.
        let eq = check_conjecture6(&entry("S3"), &entry("C2"), ClaimId::Conj6(Some(1))).unwrap();
        let witness = eq
            .instances
            .iter()
            .find(|i| i.element.as_deref() == Some("((1 2),1)"))
            .unwrap();
        assert_eq!(witness.verdict, Some(false));
        let normality =
            check_conjecture6(&entry("S3"), &entry("C2"), ClaimId::Conj6(Some(2))).unwrap();
        assert!(normality.all_held());

        // Abelian × abelian holds everywhere.
        let report = check_conjecture6(&entry("C4"), &entry("K4"), ClaimId::Conj6(None)).unwrap();
        assert!(report.all_held());
    }

    #[test]
    fn prop3_componentwise_evaluation() {
        let report = check_prop3(&entry("C3"), &entry("S3")).unwrap();
        assert!(report.all_held());
        assert_eq!(report.instances.len(), PROP3_WORDS.len());

        // Above the exhaustive bound the sampled path runs.
        let report = check_prop3(&entry("D8"), &entry("A4")).unwrap();
        assert!(report.all_held());
    }

    #[test]
    fn search_over_abelian_catalog_finds_nothing() {
        let catalog_entries = vec![entry("C2"), entry("C3"), entry("K4")];
        let report = search_counterexamples(
            &catalog_entries,
            ClaimId::Conj6(Some(1)),
            SearchOptions::default(),
        )
        .unwrap();
        assert!(report.all_held());
    }

    #[test]
    fn search_finds_minimal_failure_at_order_12() {
        let catalog_entries = vec![
            entry("C2"),
            entry("S3"),
            entry("D8"),
            entry("Q8"),
            entry("A4"),
        ];
        let report = search_counterexamples(
            &catalog_entries,
            ClaimId::Conj6(Some(1)),
            SearchOptions::default(),
        )
        .unwrap();
        assert!(!report.all_held());
        let first_failure = report
            .instances
            .iter()
            .find(|i| i.verdict == Some(false))
            .unwrap();
        let order: usize = first_failure
            .groups
            .iter()
            .map(|n| catalog(n).unwrap().order())
            .product();
        assert!(order <= 12, "first failure at product order {order}");
    }

    #[test]
    fn search_lists_skipped_pairs() {
        let catalog_entries = vec![entry("C2"), entry("A5")];
        let report = search_counterexamples(
            &catalog_entries,
            ClaimId::Conj6(Some(1)),
            SearchOptions {
                exhaustive: true,
                order_cap: 200,
                ..SearchOptions::default()
            },
        )
        .unwrap();
        let skipped: Vec<_> = report
            .instances
            .iter()
            .filter(|i| i.verdict.is_none())
            .collect();
        // A5×A5 is the one pair over the cap of 200.
        assert_eq!(skipped.len(), 1);
        assert_eq!(skipped[0].groups, vec!["A5", "A5"]);
        assert!(skipped[0].witnesses[0].contains("skipped"));
    }

    #[test]
    fn analyze_examples() {
        let k4xs3 = CatalogEntry::new(
            "K4xS3",
            FiniteGroup::direct_product(&catalog("K4").unwrap(), &catalog("S3").unwrap()).unwrap(),
        );
        let summary = analyze_group(&k4xs3);
        assert_eq!(summary.order, 24);
        assert!(!summary.abelian);
        assert!(summary.solvable);
        assert!(summary.metabelian);
        assert_eq!(summary.derived_series_orders, vec![24, 3, 1]);

        let trivial = analyze_group(&entry("trivial"));
        assert!(trivial.abelian && trivial.solvable && trivial.metabelian);

        let s4 = analyze_group(&entry("S4"));
        assert!(s4.solvable);
        assert!(!s4.metabelian);
        assert_eq!(s4.derived_series_orders, vec![24, 12, 4, 1]);

        // Above the enumeration cap the subgroup count is omitted.
        let big = CatalogEntry::new(
            "S4xA4",
            FiniteGroup::direct_product(&catalog("S4").unwrap(), &catalog("A4").unwrap())
                .unwrap(),
        );
        let summary = analyze_group(&big);
        assert_eq!(summary.order, 288);
        assert_eq!(summary.normal_subgroup_count, None);
    }

    #[test]
    fn reports_are_deterministic() {
        let run = || {
            let report =
                check_conjecture6(&entry("S3"), &entry("C2"), ClaimId::Conj6(None)).unwrap();
            (report.to_json(), report.render_text())
        };
        assert_eq!(run(), run());
    }
}
