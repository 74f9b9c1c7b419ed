//! Machine-readable renderings of classification entries and type reports:
//! versioned JSON, CSV, and Markdown. Exact values are emitted as strings in
//! the same syntax the parsers accept, together with decimal approximations.

use crate::catalog::{families_for, family_constraints, spectrum_strings, ModelSpec, Param, SpaceForm};
use crate::classify::{ClassificationEntry, TheoremReport};
use crate::error::Result;
use crate::frame::{TypeReport, TypeVerdict};
use crate::scalar::Scalar;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

impl Format {
    pub fn parse(s: &str) -> crate::error::Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Markdown),
            other => Err(crate::error::HopfError::Parse(format!(
                "unknown format {other}"
            ))),
        }
    }
}

fn scalar_json(s: &Scalar) -> Value {
    json!({
        "exact": s.to_string(),
        "decimal": if s.is_symbolic() { Value::Null } else { json!(s.to_f64()) },
    })
}

fn space_string(sf: SpaceForm) -> String {
    if sf.c == 1 {
        format!("cp{}", sf.m)
    } else {
        format!("ch{}", sf.m)
    }
}

fn verdict_string(v: &TypeVerdict) -> String {
    v.to_string()
}

pub fn entry_json(e: &ClassificationEntry) -> Value {
    json!({
        "family": e.family.name(),
        "space": space_string(e.sf),
        "m": e.sf.m,
        "k": e.k,
        "param_kind": e.param_kind,
        "param": e.param.as_ref().map(scalar_json),
        "param_constraint": e.param_constraint,
        "radius": e.radius,
        "type": verdict_string(&e.verdict),
        "eigenvalues": e.eigenvalues.iter().map(scalar_json).collect::<Vec<_>>(),
        "mass_symmetric": e.mass_symmetric,
        "item": e.item,
        "verified_by": e.verified_by,
        "notes": e.notes,
    })
}

pub fn entries_json(title: &str, banner: &str, entries: &[ClassificationEntry]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "title": title,
        "banner": banner,
        "entries": entries.iter().map(entry_json).collect::<Vec<_>>(),
    })
}

pub fn theorem_json(rep: &TheoremReport) -> Value {
    entries_json(rep.id.title(), &rep.banner, &rep.entries)
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn entries_csv(entries: &[ClassificationEntry]) -> String {
    let mut out = String::from(
        "family,space,m,k,param_kind,param,radius,type,eigenvalues,mass_symmetric,item\n",
    );
    for e in entries {
        let eigen = e
            .eigenvalues
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        let row = [
            e.family.name().to_string(),
            space_string(e.sf),
            e.sf.m.to_string(),
            e.k.map(|k| k.to_string()).unwrap_or_default(),
            e.param_kind.to_string(),
            e.param
                .as_ref()
                .map(|p| p.to_string())
                .unwrap_or_else(|| e.param_constraint.clone().unwrap_or_default()),
            e.radius.clone(),
            verdict_string(&e.verdict),
            eigen,
            e.mass_symmetric.to_string(),
            e.item.clone(),
        ];
        out.push_str(
            &row.iter()
                .map(|c| csv_escape(c))
                .collect::<Vec<_>>()
                .join(","),
        );
        out.push('\n');
    }
    out
}

pub fn entries_markdown(title: &str, banner: &str, entries: &[ClassificationEntry]) -> String {
    let mut out = format!("# {title}\n\n_{banner}_\n\n");
    out.push_str("| family | space | parameter | radius | type | eigenvalues | mass-symmetric | item |\n");
    out.push_str("|---|---|---|---|---|---|---|---|\n");
    for e in entries {
        let param = e
            .param
            .as_ref()
            .map(|p| format!("{} = {}", e.param_kind, p))
            .unwrap_or_else(|| e.param_constraint.clone().unwrap_or_else(|| "-".into()));
        let eigen = if e.eigenvalues.is_empty() {
            "-".to_string()
        } else {
            e.eigenvalues
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let fam = match e.k {
            Some(k) => format!("{} (k={k})", e.family.name()),
            None => e.family.name().to_string(),
        };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} | {} | {} |\n",
            fam,
            space_string(e.sf),
            param,
            e.radius,
            verdict_string(&e.verdict),
            eigen,
            e.mass_symmetric,
            e.item,
        ));
    }
    for e in entries {
        if !e.notes.is_empty() {
            out.push_str(&format!(
                "\n- {} ({}): {}\n",
                e.family.name(),
                e.item,
                e.notes.join("; ")
            ));
        }
    }
    out
}

pub fn render_entries(
    format: Format,
    title: &str,
    banner: &str,
    entries: &[ClassificationEntry],
) -> String {
    match format {
        Format::Json => {
            serde_json::to_string_pretty(&entries_json(title, banner, entries)).unwrap()
        }
        Format::Csv => entries_csv(entries),
        Format::Markdown => entries_markdown(title, banner, entries),
    }
}

/// The frame-module type report as JSON.
pub fn type_report_json(r: &TypeReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "family": r.family.name(),
        "space": if r.c == 1 { format!("cp{}", r.m) } else { format!("ch{}", r.m) },
        "m": r.m,
        "param": r.param.as_ref().map(scalar_json),
        "min_poly": r.min_poly.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "eigenvalues": r.eigenvalues.iter().map(scalar_json).collect::<Vec<_>>(),
        "type": verdict_string(&r.verdict),
        "mass_symmetric": r.mass_symmetric,
        "residual": format!("{}", r.kernel_residual),
        "notes": r.notes,
    })
}

/// Catalog rows for one space form.
pub fn catalog_json(sf: SpaceForm) -> Result<Value> {
    let mut rows = Vec::new();
    for (family, k) in families_for(sf) {
        let spec = ModelSpec::new(
            family,
            sf,
            k,
            if family == crate::catalog::Family::A0 {
                Param::None
            } else {
                Param::Symbolic
            },
        );
        let report = family_constraints(&spec);
        rows.push(json!({
            "family": family.name(),
            "k": k,
            "constraints": report.param_range,
            "coincidences": report.coincidences,
            "spectrum": spectrum_strings(family, sf, k),
        }));
    }
    Ok(json!({
        "schema_version": SCHEMA_VERSION,
        "space": space_string(sf),
        "m": sf.m,
        "families": rows,
    }))
}

pub fn catalog_markdown(sf: SpaceForm) -> Result<String> {
    let mut out = format!("# Catalog for {}\n\n", space_string(sf));
    out.push_str("| family | constraints | spectrum |\n|---|---|---|\n");
    for (family, k) in families_for(sf) {
        let spec = ModelSpec::new(
            family,
            sf,
            k,
            if family == crate::catalog::Family::A0 {
                Param::None
            } else {
                Param::Symbolic
            },
        );
        let report = family_constraints(&spec);
        let fam = match k {
            Some(k) => format!("{} (k={k})", family.name()),
            None => family.name().to_string(),
        };
        out.push_str(&format!(
            "| {} | {} | {} |\n",
            fam,
            report.param_range,
            spectrum_strings(family, sf, k).join("; ")
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{theorem_report, TheoremId};

    #[test]
    fn theorem_one_renders_in_all_formats() {
        let rep = theorem_report(TheoremId::T1, 2).unwrap();
        let j = theorem_json(&rep);
        assert_eq!(j["schema_version"], "1");
        assert_eq!(j["entries"].as_array().unwrap().len(), 3);
        let csv = entries_csv(&rep.entries);
        assert_eq!(csv.lines().count(), 4);
        let md = entries_markdown(rep.id.title(), &rep.banner, &rep.entries);
        assert!(md.contains("| family |"));
    }

    #[test]
    fn catalog_rows() {
        let j = catalog_json(SpaceForm::hyperbolic(3)).unwrap();
        let fams: Vec<&str> = j["families"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["family"].as_str().unwrap())
            .collect();
        assert_eq!(fams, vec!["A0", "A1", "A1''", "A2", "B"]);
        // projective m = 9 includes class D
        let j = catalog_json(SpaceForm::projective(9)).unwrap();
        assert!(j["families"]
            .as_array()
            .unwrap()
            .iter()
            .any(|r| r["family"] == "D"));
        // hyperbolic m = 2 has no tube family
        let j = catalog_json(SpaceForm::hyperbolic(2)).unwrap();
        assert!(!j["families"]
            .as_array()
            .unwrap()
            .iter()
            .any(|r| r["family"] == "A2"));
    }
}
