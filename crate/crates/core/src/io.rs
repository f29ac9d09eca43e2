//! JSON files for tables, Hopf quasigroups, graded structures and modules.
//!
//! Scalars are written as strings (`"3"`, `"-1/2"`, GF(p) representatives in
//! `[0, p)`); plain JSON integers are accepted on input. Matrices are dense and
//! row-major. Output is canonical: keys sorted, two-space indentation, one
//! trailing newline, so a save of a load is byte-identical.

use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Map, Value};

use crate::algebra::UnitalAlgebra;
use crate::error::{Error, Result};
use crate::exactlin::{Atom, Field, LinMap, Scalar, Space};
use crate::gchq::{component_name, CrossedGchq, HopfAction};
use crate::hq::HopfQuasigroup;
use crate::tables::{CayleyTable, GroupTable};
use crate::yd::YDModule;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing key \"{key}\"")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| parse_err(format!("{what} must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what} must be an array")))
}

fn as_object<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| parse_err(format!("{what} must be an object")))
}

fn scalar(field: Field, v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => field.parse(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(field.from_i64(i)),
            None => field.parse(&n.to_string()),
        },
        _ => Err(parse_err(format!("scalar must be a string or integer, found {v}"))),
    }
}

fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

fn vector(field: Field, v: &Value, what: &str) -> Result<Vec<Scalar>> {
    as_array(v, what)?.iter().map(|x| scalar(field, x)).collect()
}

fn matrix(field: Field, v: &Value, domain: Space, codomain: Space, what: &str) -> Result<LinMap> {
    let rows = as_array(v, what)?
        .iter()
        .map(|row| vector(field, row, what))
        .collect::<Result<Vec<_>>>()?;
    LinMap::from_dense(field, domain, codomain, &rows)
        .map_err(|e| Error::MalformedStructure(format!("{what}: {e}")))
}

fn matrix_json(m: &LinMap) -> Value {
    Value::Array(m.to_dense().iter().map(|row| Value::Array(row.iter().map(scalar_json).collect())).collect())
}

/// A map into `k`, stored as a plain vector.
fn covector(field: Field, v: &Value, domain: Space, what: &str) -> Result<LinMap> {
    // accept both [a, b, …] and [[a, b, …]]
    let flat = match as_array(v, what)?.first() {
        Some(Value::Array(_)) => as_array(v, what)?.first().cloned().unwrap_or(Value::Null),
        _ => v.clone(),
    };
    let entries = vector(field, &flat, what)?;
    LinMap::from_dense(field, domain, Space::ground(), &[entries])
        .map_err(|e| Error::MalformedStructure(format!("{what}: {e}")))
}

fn covector_json(m: &LinMap) -> Value {
    Value::Array(m.to_dense()[0].iter().map(scalar_json).collect())
}

fn field_of(v: &Value, default: Field) -> Result<Field> {
    match v.get("field") {
        None => Ok(default),
        Some(Value::String(s)) => s.parse(),
        Some(other) => Err(parse_err(format!("field must be a string, found {other}"))),
    }
}

pub fn table_to_json(t: &CayleyTable) -> Value {
    json!({ "order": t.order(), "labels": t.labels, "table": t.table })
}

pub fn table_from_json(v: &Value) -> Result<CayleyTable> {
    let order = as_usize(get(v, "order")?, "order")?;
    let table = as_array(get(v, "table")?, "table")?
        .iter()
        .map(|row| as_array(row, "table row")?.iter().map(|x| as_usize(x, "table entry")).collect())
        .collect::<Result<Vec<Vec<usize>>>>()?;
    if table.len() != order {
        return Err(Error::InvalidTable(format!("order {order} but {} rows", table.len())));
    }
    let t = match v.get("labels") {
        None => CayleyTable::unlabeled(table),
        Some(labels) => {
            let labels = as_array(labels, "labels")?
                .iter()
                .map(|l| l.as_str().map(str::to_string).ok_or_else(|| parse_err("labels must be strings")))
                .collect::<Result<Vec<_>>>()?;
            if labels.len() != order {
                return Err(Error::InvalidTable(format!("order {order} but {} labels", labels.len())));
            }
            CayleyTable::new(labels, table)
        }
    };
    Ok(t)
}

pub fn group_from_json(v: &Value) -> Result<GroupTable> {
    GroupTable::try_from(table_from_json(v)?)
}

fn algebra_json(a: &UnitalAlgebra) -> Value {
    let mult: Vec<Value> = a
        .structure_constants()
        .into_iter()
        .map(|(i, j, k, c)| json!([i, j, k, c.to_string()]))
        .collect();
    json!({
        "dim": a.dim(),
        "mult": mult,
        "unit": a.unit_vector().iter().map(scalar_json).collect::<Vec<_>>(),
    })
}

fn algebra_from_json(field: Field, name: &str, v: &Value) -> Result<UnitalAlgebra> {
    let dim = as_usize(get(v, "dim")?, "dim")?;
    let mut constants = Vec::new();
    for t in as_array(get(v, "mult")?, "mult")? {
        let t = as_array(t, "mult triplet")?;
        if t.len() != 4 {
            return Err(parse_err("mult entries must be [i, j, k, value]"));
        }
        constants.push((
            as_usize(&t[0], "i")?,
            as_usize(&t[1], "j")?,
            as_usize(&t[2], "k")?,
            scalar(field, &t[3])?,
        ));
    }
    let unit = vector(field, get(v, "unit")?, "unit")?;
    UnitalAlgebra::from_structure_constants(field, name, dim, constants, &unit)
}

pub fn hq_to_json(h: &HopfQuasigroup) -> Value {
    let mut v = algebra_json(h.algebra());
    let o = v.as_object_mut().expect("object");
    o.insert("field".into(), Value::String(h.field().to_string()));
    o.insert("comult".into(), matrix_json(h.comult()));
    o.insert("counit".into(), covector_json(h.counit()));
    o.insert("antipode".into(), matrix_json(h.antipode()));
    v
}

pub fn hq_from_json(v: &Value, default_field: Field) -> Result<HopfQuasigroup> {
    let field = field_of(v, default_field)?;
    let algebra = algebra_from_json(field, "H", v)?;
    let h = algebra.space().clone();
    let comult = matrix(field, get(v, "comult")?, h.clone(), h.tensor(&h), "comult")?;
    let counit = covector(field, get(v, "counit")?, h.clone(), "counit")?;
    let antipode = matrix(field, get(v, "antipode")?, h.clone(), h, "antipode")?;
    HopfQuasigroup::new(algebra, comult, counit, antipode)
}

pub fn gchq_to_json(h: &CrossedGchq) -> Value {
    let n = h.order();
    let mut components = Map::new();
    let mut antipode = Map::new();
    let mut comult = Map::new();
    let mut crossing = Map::new();
    for p in 0..n {
        components.insert(p.to_string(), algebra_json(h.component(p)));
        antipode.insert(p.to_string(), matrix_json(h.antipode(p)));
        for q in 0..n {
            comult.insert(format!("{p},{q}"), matrix_json(h.comult(p, q)));
            crossing.insert(format!("{p}|{q}"), matrix_json(h.crossing(p, q)));
        }
    }
    json!({
        "group": table_to_json(h.group().cayley()),
        "field": h.field().to_string(),
        "components": components,
        "comult": comult,
        "counit": covector_json(h.counit()),
        "antipode": antipode,
        "crossing": crossing,
    })
}

pub fn gchq_from_json(v: &Value, default_field: Field) -> Result<CrossedGchq> {
    let field = field_of(v, default_field)?;
    let group = group_from_json(get(v, "group")?)?;
    let n = group.order();
    let comps = as_object(get(v, "components")?, "components")?;
    let mut components = Vec::with_capacity(n);
    for p in 0..n {
        let c = comps.get(&p.to_string()).ok_or_else(|| parse_err(format!("missing component {p}")))?;
        components.push(algebra_from_json(field, &component_name(&group, p), c)?);
    }
    let sp = |p: usize| components[p].space().clone();
    let lookup = |obj: &Value, key: String, what: &str| -> Result<Value> {
        as_object(obj, what)?.get(&key).cloned().ok_or_else(|| parse_err(format!("missing {what} \"{key}\"")))
    };
    let (cm, ap, cr) = (get(v, "comult")?, get(v, "antipode")?, get(v, "crossing")?);
    let mut comult = Vec::with_capacity(n * n);
    let mut crossing = Vec::with_capacity(n * n);
    for p in 0..n {
        for q in 0..n {
            let m = lookup(cm, format!("{p},{q}"), "comult")?;
            comult.push(matrix(field, &m, sp(group.mul(p, q)), sp(p).tensor(&sp(q)), "comult")?);
            let m = lookup(cr, format!("{p}|{q}"), "crossing")?;
            crossing.push(matrix(field, &m, sp(q), sp(group.conj(p, q)), "crossing")?);
        }
    }
    let antipode = (0..n)
        .map(|p| matrix(field, &lookup(ap, p.to_string(), "antipode")?, sp(p), sp(group.inv(p)), "antipode"))
        .collect::<Result<Vec<_>>>()?;
    let counit = covector(field, get(v, "counit")?, sp(group.identity()), "counit")?;
    CrossedGchq::new(group, components, comult, counit, antipode, crossing)
}

/// The base is written inline; the atoms of the module space are recorded
/// so that tensor products load back with the same structure.
pub fn yd_to_json(m: &YDModule) -> Value {
    let mut coaction = Map::new();
    for r in 0..m.base().order() {
        coaction.insert(r.to_string(), matrix_json(m.coaction(r)));
    }
    let space: Vec<Value> = m.space().atoms().iter().map(|a| json!({ "name": a.name(), "dim": a.dim() })).collect();
    json!({
        "base": gchq_to_json(m.base()),
        "grade": m.grade(),
        "dim": m.dim(),
        "space": space,
        "action": matrix_json(m.action()),
        "coaction": coaction,
        "strict": m.is_strict(),
    })
}

/// Loads a module; a string `base` is a path, resolved against `base_dir`.
pub fn yd_from_json(v: &Value, default_field: Field, base_dir: Option<&Path>) -> Result<YDModule> {
    let base = match get(v, "base")? {
        Value::String(path) => {
            let path = match base_dir {
                Some(dir) => dir.join(path),
                None => Path::new(path).to_path_buf(),
            };
            let text = std::fs::read_to_string(&path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
            let value: Value = serde_json::from_str(&text).map_err(|e| parse_err(e.to_string()))?;
            gchq_from_json(&value, default_field)?
        }
        inline => gchq_from_json(inline, default_field)?,
    };
    let field = base.field();
    let grade = as_usize(get(v, "grade")?, "grade")?;
    base.check_grade(grade).map_err(|_| parse_err(format!("grade {grade} out of range")))?;
    let dim = as_usize(get(v, "dim")?, "dim")?;
    let space = match v.get("space") {
        None => Space::atom("V", dim),
        Some(atoms) => {
            let atoms = as_array(atoms, "space")?
                .iter()
                .map(|a| {
                    let name = get(a, "name")?.as_str().ok_or_else(|| parse_err("atom name must be a string"))?;
                    Ok(Atom::new(name, as_usize(get(a, "dim")?, "atom dim")?))
                })
                .collect::<Result<Vec<_>>>()?;
            let s = Space::from_atoms(atoms);
            if s.dim() != dim {
                return Err(Error::MalformedStructure(format!("space has dimension {} but dim is {dim}", s.dim())));
            }
            s
        }
    };
    let strict = get(v, "strict")?.as_bool().ok_or_else(|| parse_err("strict must be a boolean"))?;
    let action = matrix(field, get(v, "action")?, base.space(grade).tensor(&space), space.clone(), "action")?;
    let co = get(v, "coaction")?;
    let coaction = (0..base.order())
        .map(|r| {
            let m = as_object(co, "coaction")?
                .get(&r.to_string())
                .ok_or_else(|| parse_err(format!("missing coaction {r}")))?;
            matrix(field, m, space.clone(), space.tensor(base.space(r)), "coaction")
        })
        .collect::<Result<Vec<_>>>()?;
    YDModule::new(Arc::new(base), grade, space, action, coaction, strict)
}

/// `{"group": table, "maps": [[…], …]}` with basis permutations, or
/// `"matrices": [matrix, …]` for general linear actions.
pub fn action_from_json(v: &Value, h: &HopfQuasigroup) -> Result<HopfAction> {
    let group = group_from_json(get(v, "group")?)?;
    let (field, space) = (h.field(), h.space().clone());
    let maps = if let Some(perms) = v.get("maps") {
        as_array(perms, "maps")?
            .iter()
            .map(|perm| {
                let perm = as_array(perm, "map")?.iter().map(|x| as_usize(x, "map entry")).collect::<Result<Vec<_>>>()?;
                if perm.len() != space.dim() {
                    return Err(Error::MalformedStructure(format!("permutation of length {} on dimension {}", perm.len(), space.dim())));
                }
                LinMap::from_basis_map(field, space.clone(), space.clone(), |x| perm[x])
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        as_array(get(v, "matrices")?, "matrices")?
            .iter()
            .map(|m| matrix(field, m, space.clone(), space.clone(), "action matrix"))
            .collect::<Result<Vec<_>>>()?
    };
    Ok(HopfAction::new(group, maps))
}

pub fn action_to_json(a: &HopfAction) -> Value {
    json!({
        "group": table_to_json(a.group().cayley()),
        "matrices": a.maps().iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_canonical_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| parse_err(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

pub fn write_json(path: &Path, v: &Value) -> Result<()> {
    std::fs::write(path, to_canonical_string(v)).map_err(|e| parse_err(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hq::loop_algebra;
    use crate::tables::LoopTable;

    #[test]
    fn hq_round_trip_is_identity() {
        let h = loop_algebra(&LoopTable::octonion_units(), Field::prime(5).unwrap());
        let text = to_canonical_string(&hq_to_json(&h));
        let back = hq_from_json(&serde_json::from_str(&text).unwrap(), Field::Rational).unwrap();
        assert_eq!(back, h);
        assert_eq!(to_canonical_string(&hq_to_json(&back)), text);
    }

    #[test]
    fn scalars_accept_numbers_and_fractions() {
        let q = Field::Rational;
        assert_eq!(scalar(q, &json!(3)).unwrap(), q.from_i64(3));
        assert_eq!(scalar(q, &json!("-1/2")).unwrap(), q.parse("-1/2").unwrap());
        assert!(scalar(q, &json!(true)).is_err());
    }

    #[test]
    fn wrong_shapes_are_reported() {
        let h = loop_algebra(&LoopTable::from(&GroupTable::cyclic(2)), Field::Rational);
        let mut v = hq_to_json(&h);
        v["antipode"] = json!([["1"]]);
        assert!(matches!(hq_from_json(&v, Field::Rational), Err(Error::MalformedStructure(_))));
        v.as_object_mut().unwrap().remove("comult");
        assert!(matches!(hq_from_json(&v, Field::Rational), Err(Error::Parse(_))));
    }
}
