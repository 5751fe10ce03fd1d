//! One function per verb; each returns the text printed on success.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use coronoid::altan::{iterated_altan, patch_altan, AltanResult, IterationVector};
use coronoid::embedder::{embed, embed_seeded};
use coronoid::hexsystem::SystemKind;
use coronoid::kekule::{count_kekule, pauling_bond_orders, verify_altan_theorem};
use coronoid::planemap::{MapDocument, PatchDocument};
use coronoid::render::render_svg;
use coronoid::skeleton::{skeleton, PerimeterKind};
use coronoid::Error;

use crate::input::{load, Input};
use crate::{Args, CliError, ClosureKind, Format, Verb};

pub fn run(args: &Args) -> Result<String, CliError> {
    let input = load(&args.input)?;
    let value = match args.verb {
        Verb::Classify => classify(&input)?,
        Verb::Holes => holes(&input)?,
        Verb::Closure => return closure(&input, args),
        Verb::Perimeters => perimeters(&input, args.hole_index)?,
        Verb::Bbc => bbc(&input, args.hole_index)?,
        Verb::Altan => return altan(&input, args),
        Verb::Kekule => json!({ "K": count_kekule(&input.graph()?).to_string() }),
        Verb::Pauling => pauling(&input)?,
        Verb::Verify => verify(&input, args)?,
        Verb::Embed => return embed_graph(&input, args.seed),
        Verb::Render => return render(&input, args.format),
    };
    Ok(value.to_string())
}

fn classify(input: &Input) -> Result<Value, CliError> {
    let k = input.hex()?;
    let class = k.classify()?;
    Ok(match class.kind {
        SystemKind::Benzenoid => json!({ "kind": class.kind, "condensation": class.condensation }),
        SystemKind::ProperCoronoid => json!({ "kind": class.kind, "degeneracy": class.degeneracy }),
        SystemKind::Disconnected => json!({ "kind": class.kind }),
    })
}

fn cells(k: &coronoid::hexsystem::HexSystem) -> Value {
    json!(k.iter().map(|h| [h.q, h.r]).collect::<Vec<_>>())
}

fn holes(input: &Input) -> Result<Value, CliError> {
    let k = input.hex()?;
    if k.is_empty() {
        return Err(Error::EmptySystem.into());
    }
    let dec = k.complement_decomposition();
    let w = dec.exterior_witness;
    Ok(json!({
        "d": dec.d(),
        "holes": dec.holes.iter().map(cells).collect::<Vec<_>>(),
        "exteriorWitness": [w.q, w.r],
    }))
}

fn closure(input: &Input, args: &Args) -> Result<String, CliError> {
    if let Some(p) = input.patch()? {
        let face = args.forbidden_face.ok_or_else(|| CliError::Input("patch closure needs --forbidden-face".into()))?;
        return Ok(PatchDocument::from_patch(&p.closure(face)?).to_json());
    }
    let k = input.hex()?;
    let closed = match args.kind {
        ClosureKind::Benzenoid => k.benzenoid_closure()?,
        ClosureKind::Nondeg => k.nondeg_closure()?,
    };
    Ok(closed.to_json())
}

fn select<T>(items: Vec<T>, index: Option<usize>) -> Result<Vec<(usize, T)>, CliError> {
    let count = items.len();
    let all: Vec<(usize, T)> = items.into_iter().enumerate().collect();
    match index {
        None => Ok(all),
        Some(i) if i < count => Ok(all.into_iter().filter(|(j, _)| *j == i).collect()),
        Some(i) => Err(Error::InvalidPerimeter { index: i, count }.into()),
    }
}

fn kind_name(kind: PerimeterKind) -> &'static str {
    match kind {
        PerimeterKind::Outer => "outer",
        PerimeterKind::Inner => "inner",
    }
}

fn perimeters(input: &Input, index: Option<usize>) -> Result<Value, CliError> {
    if let Some(p) = input.patch()? {
        let perims = p.perimeters();
        let items = select(perims, index)?
            .into_iter()
            .map(|(i, q)| {
                let word: String = q.degree_word().iter().map(|d| d.to_string()).collect();
                json!({ "index": i, "hole": q.hole, "length": q.len(), "degrees": word })
            })
            .collect();
        return Ok(Value::Array(items));
    }
    let g = skeleton(input.hex()?)?;
    let items = select(g.perimeters(), index)?
        .into_iter()
        .map(|(i, p)| {
            let verts: Vec<[i32; 3]> = p.cycle.iter().map(|v| [v.q, v.r, v.t() as i32]).collect();
            json!({ "index": i, "kind": kind_name(p.kind), "hole": p.hole, "length": p.len(), "vertices": verts })
        })
        .collect();
    Ok(Value::Array(items))
}

fn bbc(input: &Input, index: Option<usize>) -> Result<Value, CliError> {
    let g = skeleton(input.hex()?)?;
    let items = select(g.perimeters(), index)?
        .into_iter()
        .map(|(i, p)| {
            let code = g.bbc(&p);
            json!({
                "index": i,
                "kind": kind_name(p.kind),
                "raw": code.to_string(),
                "canonical": code.canonical().to_string(),
            })
        })
        .collect();
    Ok(Value::Array(items))
}

fn iteration_vector(args: &Args) -> Result<IterationVector, CliError> {
    let text = args.n.as_deref().ok_or_else(|| CliError::Input("missing --n".into()))?;
    text.parse().map_err(|e: Error| CliError::Input(e.to_string()))
}

fn altan(input: &Input, args: &Args) -> Result<String, CliError> {
    let n = iteration_vector(args)?;
    if let Some(p) = input.patch()? {
        return Ok(PatchDocument::from_patch(&patch_altan(&p, &n)?.patch).to_json());
    }
    let r = iterated_altan(&input.structure()?, &n)?;
    Ok(altan_document(&r).to_json())
}

fn altan_document(r: &AltanResult) -> MapDocument {
    let s = &r.structure;
    let mut doc = MapDocument::from_map(s.map(), 0);
    doc.cycles = Some((0..s.cycle_count()).map(|j| s.cycle_vertices(j)).collect());
    let steps: Vec<Value> =
        r.steps.iter().map(|st| json!({ "cycle": st.cycle, "generation": st.generation, "d": st.d })).collect();
    doc.tags = Some(json!({
        "vertexGeneration": r.vertex_generation,
        "spokes": r.spokes().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        "ringEdges": r.ring_edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        "steps": steps,
    }));
    doc
}

fn pauling(input: &Input) -> Result<Value, CliError> {
    let b = pauling_bond_orders(&input.graph()?)?;
    let edges: Vec<Value> = b
        .edges
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| json!({ "u": u, "v": v, "order": b.order(e).to_string() }))
        .collect();
    Ok(json!({ "K": b.kekule_count.to_string(), "edges": edges }))
}

fn verify(input: &Input, args: &Args) -> Result<Value, CliError> {
    let n = iteration_vector(args)?;
    let report = verify_altan_theorem(&input.structure()?, &n)?;
    Ok(serde_json::to_value(report).expect("reports serialise"))
}

fn embed_graph(input: &Input, seed: Option<u64>) -> Result<String, CliError> {
    let g = input.graph()?;
    let k = match seed {
        None => embed(&g)?,
        Some(s) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let start = rng.gen_range(0..g.vertex_count().max(1) * 3);
            embed_seeded(&g, start, rng.gen_bool(0.5))?.system
        }
    };
    Ok(k.to_json())
}

fn render(input: &Input, format: Option<Format>) -> Result<String, CliError> {
    let k = input.hex()?;
    match format.unwrap_or(Format::Svg) {
        Format::Svg => Ok(render_svg(k)?.trim_end().to_string()),
        Format::Json => Ok(serde_json::to_string(&skeleton(k)?.to_export()).expect("exports serialise")),
    }
}
