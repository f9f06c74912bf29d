//! JSON file formats read and written by the command-line tool.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::chords;
use crate::context::Context;
use crate::error::{Error, Result};
use crate::gallery::chord_transposition;
use crate::monoid::MonoidMap;
use crate::pknet::{FormFunctor, Homography, Labeling, LaxNatTrans, RelPKNet, ThinCategory};
use crate::relcore::{FiniteSet, Relation};

pub const PKNET_SCHEMA: &str = "relpk/pknet/v1";
pub const PROGRESSION_SCHEMA: &str = "relpk/progression/v1";
pub const HOMOGRAPHY_SCHEMA: &str = "relpk/homography/v1";
pub const ANALYSIS_SCHEMA: &str = "relpk/analysis/v1";
pub const GROTH_SCHEMA: &str = "relpk/groth/v1";
pub const REPORT_SCHEMA: &str = "relpk/report/v1";

fn escape(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

/// JSON pointer of a location given as reference tokens.
pub fn pointer<'a>(tokens: impl IntoIterator<Item = &'a str>) -> String {
    tokens.into_iter().map(|t| format!("/{}", escape(t))).collect()
}

fn at(ptr: &str, err: Error) -> Error {
    Error::Schema(format!("{}: {err}", if ptr.is_empty() { "/" } else { ptr }))
}

/// Deserializes `text`, reporting failures with the JSON pointer of the
/// offending value.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        use serde_path_to_error::Segment;
        let ptr: String = e
            .path()
            .iter()
            .filter_map(|s| match s {
                Segment::Seq { index } => Some(format!("/{index}")),
                Segment::Map { key } => Some(format!("/{}", escape(key))),
                Segment::Enum { variant } => Some(format!("/{}", escape(variant))),
                Segment::Unknown => None,
            })
            .collect();
        let ptr = if ptr.is_empty() { "/".to_string() } else { ptr };
        Error::Schema(format!("{ptr}: {}", e.inner()))
    })
}

fn check_schema(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return Err(Error::Schema(format!("/$schema: expected \"{expected}\", found \"{found}\"")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ShapeKind {
    Ordinal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ShapeSpec {
    Ordinal { kind: ShapeKind, n: usize },
    Explicit { objects: Vec<String>, covers: Vec<[String; 2]> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormSpec {
    pub sets: BTreeMap<String, Vec<String>>,
    pub arrows: BTreeMap<String, Vec<[String; 2]>>,
}

/// A relational PK-Net (or, without `labeling`, a search problem).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PkNetFile {
    #[serde(rename = "$schema")]
    pub schema: String,
    pub shape: ShapeSpec,
    pub form: FormSpec,
    pub context: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labeling: BTreeMap<String, String>,
    pub phi: BTreeMap<String, Vec<[String; 2]>>,
}

/// The parts of a net that do not depend on the labeling.
pub struct NetParts {
    pub shape: ThinCategory,
    pub form: FormFunctor,
    pub context: Context,
    pub phi: LaxNatTrans,
}

impl PkNetFile {
    pub fn parse(text: &str) -> Result<Self> {
        let f: PkNetFile = parse_json(text)?;
        check_schema(&f.schema, PKNET_SCHEMA)?;
        Ok(f)
    }

    pub fn parts(&self) -> Result<NetParts> {
        let shape = match &self.shape {
            ShapeSpec::Ordinal { n, .. } => ThinCategory::ordinal(*n).map_err(|e| at("/shape/n", e))?,
            ShapeSpec::Explicit { objects, covers } => {
                let pairs = covers
                    .iter()
                    .enumerate()
                    .map(|(i, [a, b])| {
                        let find = |name: &str| {
                            objects.iter().position(|o| o == name).ok_or_else(|| {
                                at(&pointer(["shape", "covers", &i.to_string()]), Error::UnknownElement(name.into()))
                            })
                        };
                        Ok((find(a)?, find(b)?))
                    })
                    .collect::<Result<_>>()?;
                ThinCategory::from_covers(objects.clone(), pairs).map_err(|e| at("/shape", e))?
            }
        };
        let context = Context::by_name(&self.context).map_err(|e| at("/context", e))?;

        let mut sets = Vec::with_capacity(shape.len());
        for o in shape.objects() {
            let labels = self
                .form
                .sets
                .get(o)
                .ok_or_else(|| at(&pointer(["form", "sets", o]), Error::Structure("missing set for object".into())))?;
            sets.push(FiniteSet::new(labels.iter().cloned()).map_err(|e| at(&pointer(["form", "sets", o]), e))?);
        }
        if let Some(extra) = self.form.sets.keys().find(|k| shape.object_index(k).is_err()) {
            return Err(at(&pointer(["form", "sets", extra]), Error::Structure("not an object of the shape".into())));
        }

        let mut relations = BTreeMap::new();
        for (name, pairs) in &self.form.arrows {
            let ptr = pointer(["form", "arrows", name]);
            let (a, b) = shape.parse_arrow(name).map_err(|e| at(&ptr, e))?;
            let pairs: Vec<(&str, &str)> = pairs.iter().map(|[x, y]| (x.as_str(), y.as_str())).collect();
            let r = Relation::from_labels(&sets[a], &sets[b], &pairs).map_err(|e| at(&ptr, e))?;
            relations.insert((a, b), r);
        }
        let form = FormFunctor::new(&shape, sets, relations).map_err(|e| at("/form/arrows", e))?;

        let mut components = Vec::with_capacity(shape.len());
        for (x, o) in shape.objects().iter().enumerate() {
            let ptr = pointer(["phi", o]);
            let pairs = self.phi.get(o).ok_or_else(|| at(&ptr, Error::Structure("missing φ component".into())))?;
            let mut r = Relation::empty(form.set(x), context.carrier());
            for (i, [a, b]) in pairs.iter().enumerate() {
                let entry = pointer(["phi", o, &i.to_string()]);
                let s = form.set(x).require(a).map_err(|e| at(&entry, e))?;
                let t = context.carrier_index(b).map_err(|e| at(&entry, e))?;
                r = r.with(s, t);
            }
            components.push(r);
        }
        if let Some(extra) = self.phi.keys().find(|k| shape.object_index(k).is_err()) {
            return Err(at(&pointer(["phi", extra]), Error::Structure("not an object of the shape".into())));
        }
        Ok(NetParts { shape, form, context, phi: LaxNatTrans::new(components) })
    }

    pub fn build(&self) -> Result<RelPKNet> {
        let p = self.parts()?;
        let mut labels = BTreeMap::new();
        for (arrow, word) in &self.labeling {
            let ptr = pointer(["labeling", arrow]);
            let a = p.shape.parse_arrow(arrow).map_err(|e| at(&ptr, e))?;
            labels.insert(a, p.context.resolve(word).map_err(|e| at(&ptr, e))?);
        }
        let labeling = Labeling::new(&p.shape, &p.context, labels).map_err(|e| at("/labeling", e))?;
        RelPKNet::new(p.shape, p.form, p.context, labeling, p.phi)
    }

    /// The file describing `net`.
    pub fn from_net(net: &RelPKNet) -> Self {
        let shape = &net.shape;
        let ordinal = shape.objects().iter().enumerate().all(|(i, o)| *o == format!("X{i}"))
            && shape.covers().iter().copied().eq((1..shape.len()).map(|i| (i - 1, i)));
        let shape_spec = if ordinal {
            ShapeSpec::Ordinal { kind: ShapeKind::Ordinal, n: shape.len() }
        } else {
            ShapeSpec::Explicit {
                objects: shape.objects().to_vec(),
                covers: shape
                    .covers()
                    .iter()
                    .map(|&(a, b)| [shape.objects()[a].clone(), shape.objects()[b].clone()])
                    .collect(),
            }
        };
        let labelled = |r: &Relation| -> Vec<[String; 2]> {
            r.pairs().map(|(i, j)| [r.source().label(i).to_string(), r.target().label(j).to_string()]).collect()
        };
        PkNetFile {
            schema: PKNET_SCHEMA.into(),
            shape: shape_spec,
            form: FormSpec {
                sets: shape
                    .objects()
                    .iter()
                    .zip(net.form.sets())
                    .map(|(o, s)| (o.clone(), s.labels().to_vec()))
                    .collect(),
                arrows: net.form.explicit().iter().map(|(&a, r)| (shape.arrow_name(a), labelled(r))).collect(),
            },
            context: net.context.name().to_string(),
            labeling: net.labeling.describe(shape, &net.context).into_iter().collect(),
            phi: shape
                .objects()
                .iter()
                .zip(net.phi.components())
                .map(|(o, c)| (o.clone(), labelled(c)))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NuSpec {
    Transposition { transposition: i64 },
    Pairs { pairs: Vec<[String; 2]> },
}

/// A PK-homography `(N, ν)` acting on nets of a given shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomographyFile {
    #[serde(rename = "$schema")]
    pub schema: String,
    /// Preset of the target context.
    pub target: String,
    /// Image word (in the target generators) of each source generator;
    /// omitted generators map to the same letter.
    #[serde(default)]
    pub hom: BTreeMap<String, String>,
    /// The ν component used at every object...
    pub nu: NuSpec,
    /// ...unless overridden per object.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub nu_objects: BTreeMap<String, NuSpec>,
}

impl HomographyFile {
    pub fn parse(text: &str) -> Result<Self> {
        let f: HomographyFile = parse_json(text)?;
        check_schema(&f.schema, HOMOGRAPHY_SCHEMA)?;
        Ok(f)
    }

    fn nu_relation(spec: &NuSpec, src: &Context, dst: &Context, ptr: &str) -> Result<Relation> {
        match spec {
            NuSpec::Transposition { transposition: n } => {
                let (a, b) = (src.carrier(), dst.carrier());
                if a != b {
                    return Err(at(ptr, Error::Domain("transposition needs equal carriers".into())));
                }
                if a == chords::universe() {
                    Ok(chord_transposition(*n))
                } else if a == chords::z12() {
                    Ok(chords::transposition(*n))
                } else {
                    Err(at(ptr, Error::Domain("transposition needs chords or pitch classes".into())))
                }
            }
            NuSpec::Pairs { pairs } => {
                let mut r = Relation::empty(src.carrier(), dst.carrier());
                for (i, [a, b]) in pairs.iter().enumerate() {
                    let entry = format!("{ptr}/pairs/{i}");
                    r = r.with(
                        src.carrier_index(a).map_err(|e| at(&entry, e))?,
                        dst.carrier_index(b).map_err(|e| at(&entry, e))?,
                    );
                }
                Ok(r)
            }
        }
    }

    /// The homography acting on nets shaped and supported like `net`.
    pub fn build(&self, net: &RelPKNet) -> Result<Homography> {
        let src = &net.context;
        let dst = Context::by_name(&self.target).map_err(|e| at("/target", e))?;
        let gens = src.monoid().generators();
        let mut words = Vec::with_capacity(gens.len());
        for g in 0..gens.len() {
            let name = gens.name(g).to_string();
            words.push(self.hom.get(&name).cloned().unwrap_or(name));
        }
        if let Some(extra) = self.hom.keys().find(|k| !(0..gens.len()).any(|g| gens.name(g).to_string() == **k)) {
            return Err(at(&pointer(["hom", extra]), Error::UnknownGenerator(extra.clone())));
        }
        let word_refs: Vec<&str> = words.iter().map(String::as_str).collect();
        let hom = MonoidMap::from_words(Arc::clone(src.monoid()), Arc::clone(dst.monoid()), &word_refs)
            .map_err(|e| at("/hom", e))?;
        let uniform = Self::nu_relation(&self.nu, src, &dst, "/nu")?;
        let mut components = vec![uniform; net.shape.len()];
        for (o, spec) in &self.nu_objects {
            let ptr = pointer(["nu_objects", o]);
            let x = net.shape.object_index(o).map_err(|e| at(&ptr, e))?;
            components[x] = Self::nu_relation(spec, src, &dst, &ptr)?;
        }
        Homography::new(hom, dst, LaxNatTrans::new(components))
    }
}

/// A chord progression to analyze in a preset context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProgressionFile {
    #[serde(rename = "$schema")]
    pub schema: String,
    pub chords: Vec<String>,
    pub context: String,
}

impl ProgressionFile {
    pub fn parse(text: &str) -> Result<Self> {
        let f: ProgressionFile = parse_json(text)?;
        check_schema(&f.schema, PROGRESSION_SCHEMA)?;
        Ok(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairResult {
    pub from: String,
    pub to: String,
    pub labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisResult {
    #[serde(rename = "$schema")]
    pub schema: String,
    pub context: String,
    pub pairs: Vec<PairResult>,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrothStats {
    #[serde(rename = "$schema")]
    pub schema: String,
    pub context: String,
    pub objects: usize,
    pub morphisms: usize,
    pub faithful: bool,
    pub audit: bool,
    pub roundtrip: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn net_round_trip() {
        for net in [gallery::muse_net(), gallery::k_net(), gallery::seventh_net()] {
            let file = PkNetFile::from_net(&net);
            let text = serde_json::to_string(&file).unwrap();
            let back = PkNetFile::parse(&text).unwrap();
            assert_eq!(back, file);
            assert_eq!(back.build().unwrap(), net);
        }
    }

    #[test]
    fn pointer_errors() {
        let bad = r#"{"$schema":"relpk/pknet/v1","shape":{"kind":"ordinal","n":2},
            "form":{"sets":{"X0":["x"],"X1":["y"]},"arrows":{"X0->X1":[["x","y"]]}},
            "context":"upl","labeling":{"X0->X1":"U"},"phi":{"X0":[["x","DM"]],"X1":[["y","Qz"]]}}"#;
        let err = PkNetFile::parse(bad).unwrap().build().unwrap_err().to_string();
        assert!(err.starts_with("/phi/X1/0:"), "{err}");
        let err = PkNetFile::parse(r#"{"$schema":"relpk/pknet/v1","shape":{"kind":"ordinal","n":"2"}}"#)
            .unwrap_err()
            .to_string();
        assert!(err.starts_with("/shape"), "{err}");
        let err = ProgressionFile::parse(r#"{"$schema":"relpk/progression/v1","chords":[1],"context":"upl"}"#)
            .unwrap_err()
            .to_string();
        assert!(err.starts_with("/chords/0:"), "{err}");
        assert_eq!(pointer(["a/b", "c~d"]), "/a~1b/c~0d");
    }
}
