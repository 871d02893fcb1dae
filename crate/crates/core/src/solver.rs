//! Every solver behind one trait, looked up by name.

use crate::cell::{build_arrangement, complete_face_in, extract_111_segment, parity_audit, Face, Parity};
use crate::error::{Error, Result};
use crate::geom::{dual_colored_points, ArcSet, ColorCounts, Segment};
use crate::io::Instance;
use crate::jordan::find_k_arcset;
use crate::lattice::{find_balanced_lline, lline_counts, LLine};
use crate::oracles::{
    arcset_mask, brute_oracle_llines, brute_oracle_wedges, count_segment_crossings, enumerate_2arc_sets, mask_of,
    scan_all_complete_faces, snap_lline, VerificationReport,
};
use crate::wedge::{find_111_wedge, halving_segment, sweep_balanced_wedge, DoubleWedge};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::time::Instant;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SolveParams {
    pub k: Option<usize>,
}

pub trait Solver: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn solve(&self, inst: &Instance, params: &SolveParams) -> Result<Value>;
    /// Check an answer against the exhaustive oracle for its class.
    fn verify(&self, inst: &Instance, params: &SolveParams, answer: &Value) -> Result<VerificationReport>;
}

fn field<T: DeserializeOwned>(answer: &Value, key: &str) -> Result<T> {
    let v = answer.get(key).ok_or_else(|| Error::Precondition(format!("answer has no {key:?} field")))?;
    Ok(serde_json::from_value(v.clone())?)
}

fn counts_json(c: &ColorCounts) -> Value {
    let (r, g, b) = c.as_tuple();
    json!([r, g, b])
}

fn report(solver: &str, answer: &Value, oracle: Value, member: bool, counts: Value, start: Instant) -> VerificationReport {
    VerificationReport {
        instance: String::new(),
        solver: solver.to_string(),
        answer: answer.clone(),
        oracle_answers: oracle,
        member,
        counts,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn face_key(f: &Face) -> Vec<usize> {
    let mut v: Vec<usize> = f.lines.iter().flatten().copied().collect();
    v.sort_unstable();
    v
}

struct CellSolver;

impl Solver for CellSolver {
    fn name(&self) -> &'static str {
        "cell"
    }
    fn summary(&self) -> &'static str {
        "complete face of a simple 3-colored line arrangement"
    }
    fn solve(&self, inst: &Instance, _: &SolveParams) -> Result<Value> {
        let arr = build_arrangement(inst.lines()?)?;
        let face = complete_face_in(&arr)?;
        Ok(json!({ "face": face, "bounding_lines": face_key(&face) }))
    }
    fn verify(&self, inst: &Instance, _: &SolveParams, answer: &Value) -> Result<VerificationReport> {
        let start = Instant::now();
        let face: Face = field(answer, "face")?;
        let arr = build_arrangement(inst.lines()?)?;
        let all = scan_all_complete_faces(&arr);
        let keys: Vec<Vec<usize>> = all.iter().map(face_key).collect();
        let member = all.iter().any(|f| face_key(f) == face_key(&face) && f.vertices == face.vertices);
        Ok(report(self.name(), answer, json!(keys), member, json!(face_key(&face)), start))
    }
}

struct SegmentSolver;

impl Solver for SegmentSolver {
    fn name(&self) -> &'static str {
        "segment"
    }
    fn summary(&self) -> &'static str {
        "segment crossing exactly one line of each color"
    }
    fn solve(&self, inst: &Instance, _: &SolveParams) -> Result<Value> {
        let lines = inst.lines()?;
        let arr = build_arrangement(lines)?;
        let face = complete_face_in(&arr)?;
        let seg = extract_111_segment(&arr, &face)?;
        Ok(json!({ "segment": seg, "counts": counts_json(&seg.crossing_counts(lines)?) }))
    }
    fn verify(&self, inst: &Instance, _: &SolveParams, answer: &Value) -> Result<VerificationReport> {
        let start = Instant::now();
        let seg: Segment = field(answer, "segment")?;
        let c = count_segment_crossings(&seg, inst.lines()?)?;
        Ok(report(self.name(), answer, json!([[1, 1, 1]]), c == ColorCounts::uniform(1), counts_json(&c), start))
    }
}

struct HalvingSolver;

impl Solver for HalvingSolver {
    fn name(&self) -> &'static str {
        "halving"
    }
    fn summary(&self) -> &'static str {
        "segment crossing n lines of each color among 6n lines"
    }
    fn solve(&self, inst: &Instance, _: &SolveParams) -> Result<Value> {
        let lines = inst.lines()?;
        let seg = halving_segment(lines)?;
        Ok(json!({ "segment": seg, "counts": counts_json(&seg.crossing_counts(lines)?) }))
    }
    fn verify(&self, inst: &Instance, _: &SolveParams, answer: &Value) -> Result<VerificationReport> {
        let start = Instant::now();
        let lines = inst.lines()?;
        let seg: Segment = field(answer, "segment")?;
        let n = lines.len() / 6;
        let c = count_segment_crossings(&seg, lines)?;
        Ok(report(self.name(), answer, json!([[n, n, n]]), c == ColorCounts::uniform(n), counts_json(&c), start))
    }
}

fn wedge_report(name: &str, inst: &Instance, answer: &Value, k: usize, start: Instant) -> Result<VerificationReport> {
    let points = inst.points()?;
    let w: DoubleWedge = field(answer, "wedge")?;
    let inside = w.membership(points)?;
    let c = ColorCounts::tally(points.iter().zip(&inside).filter(|(_, &b)| b).map(|(p, _)| p.color));
    let mask = mask_of(&inside);
    let (oracle, listed) = match brute_oracle_wedges(points, k) {
        Ok(all) => (json!(all), all.contains(&mask)),
        Err(Error::Precondition(_)) => (Value::Null, true),
        Err(e) => return Err(e),
    };
    let mut member = listed && c == ColorCounts::uniform(k);
    if let Some(seg) = answer.get("dual_segment").filter(|v| !v.is_null()) {
        let seg: Segment = serde_json::from_value(seg.clone())?;
        member &= count_segment_crossings(&seg, &dual_colored_points(points))? == ColorCounts::uniform(k);
    }
    Ok(report(name, answer, oracle, member, counts_json(&c), start))
}

struct Wedge111Solver;

impl Solver for Wedge111Solver {
    fn name(&self) -> &'static str {
        "wedge111"
    }
    fn summary(&self) -> &'static str {
        "double wedge holding one point of each color"
    }
    fn solve(&self, inst: &Instance, _: &SolveParams) -> Result<Value> {
        let points = inst.points()?;
        let w = find_111_wedge(points)?;
        Ok(json!({ "wedge": w, "counts": counts_json(&w.counts(points)?) }))
    }
    fn verify(&self, inst: &Instance, _: &SolveParams, answer: &Value) -> Result<VerificationReport> {
        wedge_report(self.name(), inst, answer, 1, Instant::now())
    }
}

struct WedgeSolver;

impl Solver for WedgeSolver {
    fn name(&self) -> &'static str {
        "wedge"
    }
    fn summary(&self) -> &'static str {
        "double wedge holding n points of each color among 6n points"
    }
    fn solve(&self, inst: &Instance, _: &SolveParams) -> Result<Value> {
        let points = inst.points()?;
        let bw = sweep_balanced_wedge(points)?;
        let seg = bw.straight_wedge()?.dual_segment();
        Ok(json!({
            "wedge": bw.wedge,
            "dual_segment": seg,
            "window": { "start": bw.start, "len": 3 * bw.n },
            "events": bw.events,
            "counts": counts_json(&bw.wedge.counts(points)?),
        }))
    }
    fn verify(&self, inst: &Instance, _: &SolveParams, answer: &Value) -> Result<VerificationReport> {
        let n = inst.points()?.len() / 6;
        wedge_report(self.name(), inst, answer, n, Instant::now())
    }
}

struct ArcsSolver;

fn need_k(params: &SolveParams) -> Result<usize> {
    params.k.ok_or_else(|| Error::Precondition("this solver needs --k".into()))
}

impl Solver for ArcsSolver {
    fn name(&self) -> &'static str {
        "arcs"
    }
    fn summary(&self) -> &'static str {
        "at most two arcs holding k points of each color"
    }
    fn solve(&self, inst: &Instance, params: &SolveParams) -> Result<Value> {
        let points = inst.circle()?;
        let k = need_k(params)?;
        let a = find_k_arcset(points, k)?;
        Ok(json!({ "arcs": a, "k": k, "counts": counts_json(&a.color_counts(points)?) }))
    }
    fn verify(&self, inst: &Instance, params: &SolveParams, answer: &Value) -> Result<VerificationReport> {
        let start = Instant::now();
        let points = inst.circle()?;
        let k = params.k.map_or_else(|| field(answer, "k"), Ok)?;
        let a: ArcSet = field(answer, "arcs")?;
        let mask = arcset_mask(&a, points);
        let c = ColorCounts::tally(points.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p.color));
        let (oracle, listed) = match enumerate_2arc_sets(points, k) {
            Ok(all) => (json!(all.iter().map(|x| x.mask).collect::<Vec<_>>()), all.iter().any(|x| x.mask == mask)),
            Err(Error::Precondition(_)) => (Value::Null, true),
            Err(e) => return Err(e),
        };
        let member = listed && a.component_count() <= 2 && c == ColorCounts::uniform(k);
        Ok(report(self.name(), answer, oracle, member, counts_json(&c), start))
    }
}

struct LLineSolver;

impl Solver for LLineSolver {
    fn name(&self) -> &'static str {
        "lline"
    }
    fn summary(&self) -> &'static str {
        "L-line with k points of each color on one side, 0 < k < n"
    }
    fn solve(&self, inst: &Instance, _: &SolveParams) -> Result<Value> {
        let s = inst.lattice()?;
        let sol = find_balanced_lline(&s)?;
        let (one, two) = lline_counts(&sol.lline, &s);
        Ok(json!({
            "lline": sol.lline,
            "k": sol.k,
            "ordering": { "anchor": sol.ordering.anchor, "theta": sol.ordering.theta, "prefix_len": sol.prefix_len },
            "counts": [counts_json(&one), counts_json(&two)],
        }))
    }
    fn verify(&self, inst: &Instance, _: &SolveParams, answer: &Value) -> Result<VerificationReport> {
        let start = Instant::now();
        let s = inst.lattice()?;
        let l: LLine = field(answer, "lline")?;
        let k: usize = field(answer, "k")?;
        let snapped = snap_lline(&l, &s);
        let all = brute_oracle_llines(&s)?;
        let listed = all.iter().any(|(m, j)| m == &snapped && *j == k);
        let oracle: Vec<Value> = all.iter().map(|(m, j)| json!({ "lline": m, "k": j })).collect();
        let (one, two) = lline_counts(&l, &s);
        let member = listed && one.balanced() == Some(k);
        Ok(report(self.name(), answer, json!(oracle), member, json!([counts_json(&one), counts_json(&two)]), start))
    }
}

struct ParitySolver;

impl Solver for ParitySolver {
    fn name(&self) -> &'static str {
        "parity"
    }
    fn summary(&self) -> &'static str {
        "common parity of the good-type counts of a colored triangulation"
    }
    fn solve(&self, inst: &Instance, _: &SolveParams) -> Result<Value> {
        let t = inst.triangulation()?;
        Ok(json!({ "parity": parity_audit(t)?, "good_type_counts": t.good_type_counts() }))
    }
    fn verify(&self, inst: &Instance, _: &SolveParams, answer: &Value) -> Result<VerificationReport> {
        let start = Instant::now();
        let t = inst.triangulation()?;
        let p: Parity = field(answer, "parity")?;
        let counts = t.good_type_counts();
        let want = if counts[0] % 2 == 0 { Parity::AllEven } else { Parity::AllOdd };
        let member = p == want && counts.iter().all(|c| c % 2 == counts[0] % 2);
        Ok(report(self.name(), answer, json!([want]), member, json!(counts), start))
    }
}

pub struct SolverRegistry {
    solvers: BTreeMap<&'static str, Box<dyn Solver>>,
}

impl SolverRegistry {
    pub fn empty() -> Self {
        SolverRegistry { solvers: BTreeMap::new() }
    }

    pub fn register(&mut self, s: Box<dyn Solver>) {
        self.solvers.insert(s.name(), s);
    }

    pub fn get(&self, name: &str) -> Result<&dyn Solver> {
        self.solvers.get(name).map(|b| b.as_ref()).ok_or_else(|| Error::UnknownSolver(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.solvers.keys().copied()
    }

    pub fn solvers(&self) -> impl Iterator<Item = &dyn Solver> + '_ {
        self.solvers.values().map(|b| b.as_ref())
    }
}

impl Default for SolverRegistry {
    fn default() -> Self {
        let mut r = SolverRegistry::empty();
        r.register(Box::new(CellSolver));
        r.register(Box::new(SegmentSolver));
        r.register(Box::new(HalvingSolver));
        r.register(Box::new(Wedge111Solver));
        r.register(Box::new(WedgeSolver));
        r.register(Box::new(ArcsSolver));
        r.register(Box::new(LLineSolver));
        r.register(Box::new(ParitySolver));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate, GenKind, GenSpec};

    fn round_trip(solver: &str, kind: GenKind, n: usize, k: Option<usize>) {
        let reg = SolverRegistry::default();
        let s = reg.get(solver).unwrap();
        let inst = generate(&GenSpec::new(kind, n, 3)).unwrap();
        let params = SolveParams { k };
        let answer = s.solve(&inst, &params).unwrap();
        let reparsed: Value = serde_json::from_str(&answer.to_string()).unwrap();
        let r1 = s.verify(&inst, &params, &answer).unwrap();
        let r2 = s.verify(&inst, &params, &reparsed).unwrap();
        assert!(r1.member, "{solver}: {}", r1.to_json_line());
        assert_eq!((r1.member, &r1.counts), (r2.member, &r2.counts));
    }

    #[test]
    fn every_solver_round_trips() {
        round_trip("cell", GenKind::SimpleLines3C, 7, None);
        round_trip("segment", GenKind::SimpleLines3C, 7, None);
        round_trip("halving", GenKind::BalancedLines3C, 2, None);
        round_trip("wedge111", GenKind::Points3C, 9, None);
        round_trip("wedge", GenKind::BalancedPoints3C, 2, None);
        round_trip("wedge", GenKind::Points3CConvex, 1, None);
        round_trip("arcs", GenKind::CirclePoints3C, 5, Some(2));
        round_trip("lline", GenKind::LatticeRedHull, 5, None);
        round_trip("parity", GenKind::ColoredSphere, 3, None);
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(SolverRegistry::default().get("nope"), Err(Error::UnknownSolver(_))));
    }

    #[test]
    fn wrong_instance_kind() {
        let inst = generate(&GenSpec::new(GenKind::CirclePoints3C, 2, 0)).unwrap();
        let e = SolverRegistry::default().get("lline").unwrap().solve(&inst, &SolveParams::default()).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn tampered_answer_fails() {
        let reg = SolverRegistry::default();
        let s = reg.get("arcs").unwrap();
        let inst = generate(&GenSpec::new(GenKind::CirclePoints3C, 4, 1)).unwrap();
        let params = SolveParams { k: Some(2) };
        let mut answer = s.solve(&inst, &params).unwrap();
        answer["arcs"] = json!([]);
        assert!(!s.verify(&inst, &params, &answer).unwrap().member);
    }
}
