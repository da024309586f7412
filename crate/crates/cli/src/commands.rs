//! One renderer per subcommand.

use burnside_core::{
    degree_of_linear_iso, factor_unit_with, ghost_map, negative_eigen_multiplicities, verify_generation, Error,
    FsType, Pipeline, SolutionRule, SpectralInput, UnitResult, VerificationStatus,
};
use serde::Serialize;

use crate::render::{cell, clean, csv_row, grid, json, parse_ints, tuple};
use crate::{Command, Emit, Failure, Format, EXIT_COUNTEREXAMPLE, EXIT_OK};

pub fn dispatch(command: &Command, ctx: &Pipeline, format: Format) -> Result<Emit, Failure> {
    let body = match command {
        Command::Info => info(ctx, format)?,
        Command::Subgroups => subgroups(ctx, format)?,
        Command::Marks => marks(ctx, format)?,
        Command::Multable => multable(ctx, format)?,
        Command::Chartable => chartable(ctx, format)?,
        Command::Irreps => irreps(ctx, format)?,
        Command::BasicDegrees => basic_degrees(ctx, format)?,
        Command::Units => units(ctx, format)?,
        Command::Factor { coeffs, min_weight } => return factor(ctx, format, coeffs, *min_weight),
        Command::Degree { mu, blocks } => degree(ctx, format, mu.as_deref(), blocks.as_deref())?,
        Command::Verify => return verify(ctx, format),
    };
    Ok(Emit { body, code: EXIT_OK })
}

fn labels(ctx: &Pipeline) -> Result<Vec<String>, Failure> {
    Ok(ctx.classes()?.labels())
}

fn fs_name(t: FsType) -> &'static str {
    match t {
        FsType::Orthogonal => "orthogonal",
        FsType::Complex => "complex",
        FsType::Quaternionic => "quaternionic",
    }
}

#[derive(Serialize)]
struct InfoDoc {
    group: String,
    order: usize,
    domain: usize,
    exponent: usize,
    abelian: bool,
    subgroups: usize,
    subgroup_classes: usize,
    conjugacy_classes: usize,
    real_irreps: usize,
}

fn info(ctx: &Pipeline, format: Format) -> Result<String, Failure> {
    let g = ctx.group();
    let classes = ctx.classes()?;
    let doc = InfoDoc {
        group: g.name().to_string(),
        order: g.order(),
        domain: g.domain(),
        exponent: g.exponent(),
        abelian: g.is_abelian(),
        subgroups: classes.subgroups().len(),
        subgroup_classes: classes.len(),
        conjugacy_classes: ctx.character_table()?.num_classes(),
        real_irreps: ctx.real_irreps()?.len(),
    };
    let pairs: [(&str, String); 9] = [
        ("group", doc.group.clone()),
        ("order", doc.order.to_string()),
        ("domain", doc.domain.to_string()),
        ("exponent", doc.exponent.to_string()),
        ("abelian", doc.abelian.to_string()),
        ("subgroups", doc.subgroups.to_string()),
        ("subgroup_classes", doc.subgroup_classes.to_string()),
        ("conjugacy_classes", doc.conjugacy_classes.to_string()),
        ("real_irreps", doc.real_irreps.to_string()),
    ];
    Ok(match format {
        Format::Json => json(&doc)?,
        Format::Csv => {
            let mut out = csv_row(&["key", "value"]);
            for (k, v) in &pairs {
                out += &csv_row(&[*k, v.as_str()]);
            }
            out
        }
        Format::Text => pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
    })
}

#[derive(Serialize)]
struct SubgroupClassDoc {
    label: String,
    order: usize,
    size: usize,
    normalizer_order: usize,
    weyl_order: usize,
    generators: Vec<String>,
}

#[derive(Serialize)]
struct SubgroupsDoc {
    order: Vec<String>,
    classes: Vec<SubgroupClassDoc>,
    containment: Vec<Vec<i64>>,
}

fn subgroups(ctx: &Pipeline, format: Format) -> Result<String, Failure> {
    let g = ctx.group();
    let classes = ctx.classes()?;
    let docs: Vec<SubgroupClassDoc> = classes
        .classes()
        .iter()
        .map(|c| SubgroupClassDoc {
            label: c.label.clone(),
            order: c.order(),
            size: c.size(),
            normalizer_order: c.normalizer_order,
            weyl_order: c.weyl_order,
            generators: minimal_generators(g, &c.representative),
        })
        .collect();
    let order = classes.labels();
    Ok(match format {
        Format::Json => json(&SubgroupsDoc {
            order,
            classes: docs,
            containment: classes.containment_counts().to_vec(),
        })?,
        Format::Csv => {
            let mut out = csv_row(&["label", "order", "size", "normalizer_order", "weyl_order", "generators"]);
            for d in &docs {
                out += &csv_row(&[
                    d.label.clone(),
                    d.order.to_string(),
                    d.size.to_string(),
                    d.normalizer_order.to_string(),
                    d.weyl_order.to_string(),
                    d.generators.join(" "),
                ]);
            }
            out
        }
        Format::Text => {
            let mut out = format!("{} subgroup classes of {} (order {})\n", docs.len(), g.name(), g.order());
            for d in &docs {
                out += &format!(
                    "{:>6}  |H| = {:<4} conjugates = {:<4} |N(H)| = {:<4} |W(H)| = {:<4} <{}>\n",
                    d.label,
                    d.order,
                    d.size,
                    d.normalizer_order,
                    d.weyl_order,
                    d.generators.join(", ")
                );
            }
            out += "\ncontainment counts n(H_i, H_j)\n";
            out += &grid(&order, &order, classes.containment_counts());
            out
        }
    })
}

/// Greedy generating set: add elements (in index order) until they generate.
fn minimal_generators(g: &burnside_core::FiniteGroup, h: &burnside_core::Subgroup) -> Vec<String> {
    let mut gens = Vec::new();
    let mut current = burnside_core::Subgroup::trivial(g);
    for e in h.elements() {
        if current.order() == h.order() {
            break;
        }
        if !current.contains(e) {
            gens.push(e);
            current = burnside_core::Subgroup::generated_by(g, &gens);
        }
    }
    gens.iter().map(|&e| g.cycle_notation(e)).collect()
}

#[derive(Serialize)]
struct MarksDoc<'a> {
    order: Vec<String>,
    psi: &'a [Vec<i64>],
}

fn marks(ctx: &Pipeline, format: Format) -> Result<String, Failure> {
    let order = labels(ctx)?;
    let psi = ctx.marks()?;
    Ok(match format {
        Format::Json => json(&MarksDoc { order, psi: psi.rows() })?,
        Format::Csv => {
            let mut header = vec![String::new()];
            header.extend(order.iter().cloned());
            let mut out = csv_row(&header);
            for (label, row) in order.iter().zip(psi.rows()) {
                let mut r = vec![label.clone()];
                r.extend(row.iter().map(|x| x.to_string()));
                out += &csv_row(&r);
            }
            out
        }
        Format::Text => grid(&order, &order, psi.rows()),
    })
}

#[derive(Serialize)]
struct MultableDoc {
    order: Vec<String>,
    tensor: Vec<Vec<Vec<i64>>>,
}

fn multable(ctx: &Pipeline, format: Format) -> Result<String, Failure> {
    let order = labels(ctx)?;
    let m = ctx.tensor()?;
    let n = m.len();
    Ok(match format {
        Format::Json => json(&MultableDoc {
            order,
            tensor: m.to_nested(),
        })?,
        Format::Csv => {
            let mut out = csv_row(&["i", "j", "k", "value"]);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        out += &csv_row(&[(i + 1) as i64, (j + 1) as i64, (k + 1) as i64, m.get(i, j, k)]);
                    }
                }
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for i in 0..n {
                for j in i..n {
                    let terms: Vec<String> = (0..n)
                        .filter(|&k| m.get(i, j, k) != 0)
                        .map(|k| format!("{}·({})", m.get(i, j, k), order[k]))
                        .collect();
                    let rhs = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
                    out += &format!("({}) × ({}) = {}\n", order[i], order[j], rhs);
                }
            }
            out
        }
    })
}

#[derive(Serialize)]
struct ElementClassDoc {
    representative: String,
    size: usize,
    element_order: usize,
}

#[derive(Serialize)]
struct CharTableDoc {
    classes: Vec<ElementClassDoc>,
    degrees: Vec<usize>,
    values: Vec<Vec<[f64; 2]>>,
    fs_types: Vec<&'static str>,
}

fn chartable(ctx: &Pipeline, format: Format) -> Result<String, Failure> {
    let g = ctx.group();
    let table = ctx.character_table()?;
    let classes: Vec<ElementClassDoc> = table
        .classes()
        .iter()
        .map(|c| ElementClassDoc {
            representative: g.cycle_notation(c.representative),
            size: c.size,
            element_order: g.element_order(c.representative),
        })
        .collect();
    let values: Vec<Vec<[f64; 2]>> = table
        .chars()
        .iter()
        .map(|row| row.iter().map(|z| [clean(z.re), clean(z.im)]).collect())
        .collect();
    let fs_types = (0..table.len())
        .map(|i| {
            Ok(match burnside_core::rep::frobenius_schur(table, i)? {
                1 => "orthogonal",
                0 => "complex",
                _ => "quaternionic",
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let show = |[re, im]: [f64; 2]| -> String {
        match (re, im) {
            (re, 0.0) => format!("{re}"),
            (0.0, im) => format!("{im}i"),
            (re, im) if im < 0.0 => format!("{re}-{}i", -im),
            (re, im) => format!("{re}+{im}i"),
        }
    };
    Ok(match format {
        Format::Json => json(&CharTableDoc {
            classes,
            degrees: table.degrees().to_vec(),
            values,
            fs_types,
        })?,
        Format::Csv => {
            let mut header = vec!["character".to_string(), "degree".into(), "fs_type".into()];
            header.extend(classes.iter().map(|c| c.representative.clone()));
            let mut out = csv_row(&header);
            for (i, row) in values.iter().enumerate() {
                let mut r = vec![format!("X{}", i + 1), table.degrees()[i].to_string(), fs_types[i].to_string()];
                r.extend(row.iter().map(|&v| show(v)));
                out += &csv_row(&r);
            }
            out
        }
        Format::Text => {
            let cols: Vec<String> = classes
                .iter()
                .map(|c| format!("{}[{}]", c.representative, c.size))
                .collect();
            let rows: Vec<String> = (0..values.len())
                .map(|i| format!("X{} ({})", i + 1, fs_types[i]))
                .collect();
            let cells: Vec<Vec<String>> = values.iter().map(|r| r.iter().map(|&v| show(v)).collect()).collect();
            grid(&cols, &rows, &cells)
        }
    })
}

#[derive(Serialize)]
struct IrrepDoc {
    index: usize,
    fs_type: &'static str,
    real_dimension: usize,
    constituents: Vec<usize>,
    character: Vec<f64>,
}

#[derive(Serialize)]
struct IrrepsDoc {
    order: Vec<String>,
    irreps: Vec<IrrepDoc>,
    #[serde(rename = "D")]
    d: Vec<Vec<i64>>,
}

fn irreps(ctx: &Pipeline, format: Format) -> Result<String, Failure> {
    let order = labels(ctx)?;
    let set = ctx.real_irreps()?;
    let d = ctx.fixed_dims()?;
    let docs: Vec<IrrepDoc> = set
        .irreps()
        .iter()
        .enumerate()
        .map(|(k, v)| IrrepDoc {
            index: k + 1,
            fs_type: fs_name(v.fs_type),
            real_dimension: v.real_dimension,
            constituents: v.provenance.iter().map(|i| i + 1).collect(),
            character: v.real_character.iter().map(|&x| clean(x)).collect(),
        })
        .collect();
    let irrep_labels: Vec<String> = (1..=docs.len()).map(|k| format!("V{k}")).collect();
    Ok(match format {
        Format::Json => json(&IrrepsDoc {
            order,
            irreps: docs,
            d: d.rows().to_vec(),
        })?,
        Format::Csv => {
            let mut header = vec!["class".to_string()];
            header.extend(irrep_labels.iter().cloned());
            let mut out = csv_row(&header);
            for (label, row) in order.iter().zip(d.rows()) {
                let mut r = vec![label.clone()];
                r.extend(row.iter().map(|x| x.to_string()));
                out += &csv_row(&r);
            }
            out
        }
        Format::Text => {
            let mut out = String::new();
            for doc in &docs {
                let chars: Vec<String> = doc.character.iter().map(|x| x.to_string()).collect();
                out += &format!(
                    "V{}: dim {} {} from X{} character {}\n",
                    doc.index,
                    doc.real_dimension,
                    doc.fs_type,
                    cell(&doc.constituents).replace(';', "+X"),
                    tuple(&chars)
                );
            }
            out += "\nfixed-point dimensions dim V^H\n";
            out += &grid(&irrep_labels, &order, d.rows());
            out
        }
    })
}

#[derive(Serialize)]
struct BasicDegreeDoc {
    irrep: usize,
    fs_type: &'static str,
    coeffs: Vec<i64>,
    ghost: Vec<i64>,
}

#[derive(Serialize)]
struct BasicDegreesDoc {
    order: Vec<String>,
    basic_degrees: Vec<BasicDegreeDoc>,
}

fn basic_degrees(ctx: &Pipeline, format: Format) -> Result<String, Failure> {
    let order = labels(ctx)?;
    let set = ctx.real_irreps()?;
    let docs: Vec<BasicDegreeDoc> = ctx
        .basic_degrees()?
        .iter()
        .map(|b| BasicDegreeDoc {
            irrep: b.irrep_index + 1,
            fs_type: fs_name(set.get(b.irrep_index).fs_type),
            coeffs: b.element.coeffs().to_vec(),
            ghost: b.ghost.values().to_vec(),
        })
        .collect();
    Ok(match format {
        Format::Json => json(&BasicDegreesDoc {
            order,
            basic_degrees: docs,
        })?,
        Format::Csv => {
            let mut out = csv_row(&["irrep", "fs_type", "coeffs", "ghost"]);
            for d in &docs {
                out += &csv_row(&[d.irrep.to_string(), d.fs_type.into(), cell(&d.coeffs), cell(&d.ghost)]);
            }
            out
        }
        Format::Text => {
            let mut out = format!("basis {}\n", tuple(&order));
            for d in &docs {
                out += &format!(
                    "deg V{} ({}): {}  ghost {}\n",
                    d.irrep,
                    d.fs_type,
                    tuple(&d.coeffs),
                    tuple(&d.ghost)
                );
            }
            out
        }
    })
}

#[derive(Serialize)]
struct UnitDoc {
    coeffs: Vec<i64>,
    ghost: Vec<i64>,
}

#[derive(Serialize)]
struct UnitsDoc {
    order: Vec<String>,
    units: Vec<UnitDoc>,
}

fn units(ctx: &Pipeline, format: Format) -> Result<String, Failure> {
    let order = labels(ctx)?;
    let psi = ctx.marks()?;
    let docs = ctx
        .units()?
        .iter()
        .map(|u| {
            Ok(UnitDoc {
                coeffs: u.coeffs().to_vec(),
                ghost: ghost_map(psi, u)?.values().to_vec(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(match format {
        Format::Json => json(&UnitsDoc { order, units: docs })?,
        Format::Csv => {
            let mut out = csv_row(&["coeffs", "ghost"]);
            for d in &docs {
                out += &csv_row(&[cell(&d.coeffs), cell(&d.ghost)]);
            }
            out
        }
        Format::Text => {
            let mut out = format!("{} units in basis {}\n", docs.len(), tuple(&order));
            for d in &docs {
                out += &format!("{}  ghost {}\n", tuple(&d.coeffs), tuple(&d.ghost));
            }
            out
        }
    })
}

fn unit_result_text(r: &UnitResult, order: &[String]) -> String {
    let mu = match &r.mu {
        Some(mu) => tuple(mu),
        None => "none".into(),
    };
    let mut line = format!("{}  delta {}  mu {}  verified {}", tuple(&r.coeffs), tuple(&r.delta), mu, r.verified);
    if let Some(c) = &r.certificate {
        let rows: Vec<&str> = c.iter().map(|&i| order[i].as_str()).collect();
        line += &format!("  certificate rows {}", tuple(&rows));
    }
    line + "\n"
}

fn unit_result_csv(r: &UnitResult) -> String {
    csv_row(&[
        cell(&r.coeffs),
        cell(&r.delta),
        r.mu.as_deref().map(cell).unwrap_or_default(),
        r.verified.to_string(),
    ])
}

fn factor(ctx: &Pipeline, format: Format, coeffs: &str, min_weight: bool) -> Result<Emit, Failure> {
    let unit = ctx.element(parse_ints("--coeffs", coeffs)?)?;
    let rule = if min_weight { SolutionRule::MinWeight } else { SolutionRule::FreeZero };
    let delta = burnside_core::parity_vector(&unit, ctx.marks()?)?;
    let (result, code) = match factor_unit_with(&unit, ctx, rule) {
        Ok(f) => {
            let code = if f.verified { EXIT_OK } else { EXIT_COUNTEREXAMPLE };
            (
                UnitResult {
                    coeffs: f.unit.coeffs().to_vec(),
                    delta: delta.0,
                    mu: Some(f.mu),
                    verified: f.verified,
                    certificate: None,
                },
                code,
            )
        }
        Err(Error::UnitNotFactorable { coeffs, delta, certificate }) => (
            UnitResult {
                coeffs,
                delta,
                mu: None,
                verified: false,
                certificate: Some(certificate),
            },
            EXIT_COUNTEREXAMPLE,
        ),
        Err(e) => return Err(e.into()),
    };
    let body = match format {
        Format::Json => json(&result)?,
        Format::Csv => csv_row(&["coeffs", "delta", "mu", "verified"]) + &unit_result_csv(&result),
        Format::Text => unit_result_text(&result, &labels(ctx)?),
    };
    Ok(Emit { body, code })
}

#[derive(Serialize)]
struct DegreeDoc {
    order: Vec<String>,
    mu: Vec<u64>,
    coeffs: Vec<i64>,
    ghost: Vec<i64>,
}

fn degree(ctx: &Pipeline, format: Format, mu: Option<&str>, blocks: Option<&std::path::Path>) -> Result<String, Failure> {
    let r = ctx.real_irreps()?.len();
    let input = match (mu, blocks) {
        (Some(raw), _) => {
            let counts = parse_ints("--mu", raw)?;
            if counts.len() != r {
                return Err(Error::InvalidInput(format!("--mu has {} entries, expected r = {r}", counts.len())).into());
            }
            let counts: Vec<u64> = counts
                .iter()
                .map(|&c| u64::try_from(c).map_err(|_| Error::InvalidInput(format!("--mu: negative count {c}"))))
                .collect::<Result<_, _>>()?;
            SpectralInput::from_counts(&counts)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
            SpectralInput::from_json(r, &text)?
        }
        (None, None) => return Err(Failure::usage("degree needs --mu or --blocks")),
    };
    let mu = negative_eigen_multiplicities(&input)?;
    let element = degree_of_linear_iso(&input, ctx.basic_degrees()?, ctx.tensor()?)?;
    let doc = DegreeDoc {
        order: labels(ctx)?,
        mu,
        ghost: ghost_map(ctx.marks()?, &element)?.values().to_vec(),
        coeffs: element.into_coeffs(),
    };
    Ok(match format {
        Format::Json => json(&doc)?,
        Format::Csv => csv_row(&["mu", "coeffs", "ghost"]) + &csv_row(&[cell(&doc.mu), cell(&doc.coeffs), cell(&doc.ghost)]),
        Format::Text => format!(
            "mu {}\ndegree {}\nghost {}\nbasis {}\n",
            tuple(&doc.mu),
            tuple(&doc.coeffs),
            tuple(&doc.ghost),
            tuple(&doc.order)
        ),
    })
}

fn verify(ctx: &Pipeline, format: Format) -> Result<Emit, Failure> {
    let report = verify_generation(ctx)?;
    let code = match report.status {
        VerificationStatus::Success => EXIT_OK,
        VerificationStatus::Counterexample => EXIT_COUNTEREXAMPLE,
    };
    let body = match format {
        Format::Json => json(&report)?,
        Format::Csv => {
            let mut out = csv_row(&["coeffs", "delta", "mu", "verified"]);
            for r in &report.results {
                out += &unit_result_csv(r);
            }
            out
        }
        Format::Text => {
            let status = match report.status {
                VerificationStatus::Success => "SUCCESS",
                VerificationStatus::Counterexample => "COUNTEREXAMPLE",
            };
            let mut out = format!(
                "group {}\nN = {}, r = {}, units = {}, rank D mod 2 = {}, parity rank = {}\nstatus {}\n",
                report.group,
                report.num_classes,
                report.r,
                report.unit_count,
                report.rank_d_mod2,
                report.parity_rank,
                status
            );
            let order = labels(ctx)?;
            for r in &report.results {
                out += &unit_result_text(r, &order);
            }
            out
        }
    };
    Ok(Emit { body, code })
}
