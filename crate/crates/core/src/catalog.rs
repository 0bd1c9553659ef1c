//! On-disk store of verified Ramsey witnesses.
//!
//! Layout: `<root>/witnesses/p{p}_q{q}_n{n}.g6` holds one graph6 line and
//! `p{p}_q{q}_n{n}.json` the metadata. Entries are re-verified whenever
//! they are read back.

use std::path::{Path, PathBuf};
use std::sync::Mutex;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph6::{from_graph6, parse_lines, to_graph6};
use crate::miner::{check_target, verify_witness, Provenance, RamseyWitness};

static WRITE_LOCK: Mutex<()> = Mutex::new(());

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub p: usize,
    pub q: usize,
    pub n: usize,
    pub graph6: String,
    pub sha256: String,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    dir: PathBuf,
}

fn stem(p: usize, q: usize, n: usize) -> String {
    format!("p{p}_q{q}_n{n}")
}

fn digest(s: &str) -> String {
    hex::encode(Sha256::digest(s.as_bytes()))
}

impl Catalog {
    /// Opens (creating if needed) the catalog under `root`.
    pub fn open(root: impl AsRef<Path>) -> Result<Self> {
        let dir = root.as_ref().join("witnesses");
        std::fs::create_dir_all(&dir)?;
        Ok(Catalog { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Stored witness for `(p, q, n)`, re-verified; tampered entries are errors.
    pub fn lookup(&self, p: usize, q: usize, n: usize) -> Result<Option<RamseyWitness>> {
        let g6_path = self.dir.join(format!("{}.g6", stem(p, q, n)));
        if !g6_path.exists() {
            return Ok(None);
        }
        let text = std::fs::read_to_string(&g6_path)?;
        let line = text.lines().next().unwrap_or("").trim();
        let graph = from_graph6(line)?;
        let meta_path = g6_path.with_extension("json");
        let provenance = if meta_path.exists() {
            let meta: CatalogEntry = serde_json::from_str(&std::fs::read_to_string(&meta_path)?)?;
            if meta.graph6 != line
                || meta.sha256 != digest(line)
                || (meta.p, meta.q, meta.n) != (p, q, n)
            {
                return Err(Error::Verification(format!(
                    "{} disagrees with its metadata",
                    g6_path.display()
                )));
            }
            meta.provenance
        } else {
            Provenance::Catalog {
                name: stem(p, q, n),
            }
        };
        let mut w = RamseyWitness::new(graph, p, q, provenance);
        if w.order() != n || !verify_witness(&mut w) {
            return Err(Error::Verification(format!(
                "{} is not a ({p},{q})-graph on {n} vertices",
                g6_path.display()
            )));
        }
        Ok(Some(w))
    }

    /// Verifies and writes a witness; returns the graph6 path.
    pub fn store(&self, w: &RamseyWitness) -> Result<PathBuf> {
        let mut check = w.clone();
        if !verify_witness(&mut check) {
            return Err(Error::Verification(format!(
                "not a ({},{})-graph",
                w.p, w.q
            )));
        }
        let n = w.order();
        let line = to_graph6(&w.graph);
        let entry = CatalogEntry {
            p: w.p,
            q: w.q,
            n,
            sha256: digest(&line),
            graph6: line.clone(),
            provenance: w.provenance.clone(),
        };
        let base = self.dir.join(stem(w.p, w.q, n));
        let _guard = WRITE_LOCK.lock().unwrap_or_else(|e| e.into_inner());
        write_atomic(&base.with_extension("g6"), &format!("{line}\n"))?;
        write_atomic(
            &base.with_extension("json"),
            &serde_json::to_string_pretty(&entry)?,
        )?;
        Ok(base.with_extension("g6"))
    }

    /// Reads graph6 lines from `path`, verifies each as a `(p,q)`-graph and
    /// stores them. Nothing is stored unless every line verifies.
    pub fn ingest(&self, path: impl AsRef<Path>, p: usize, q: usize) -> Result<Vec<RamseyWitness>> {
        let path = path.as_ref();
        let name = path
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let mut out = Vec::new();
        for (i, graph) in parse_lines(&std::fs::read_to_string(path)?)?
            .into_iter()
            .enumerate()
        {
            let mut w = RamseyWitness::new(
                graph,
                p,
                q,
                Provenance::Catalog {
                    name: format!("{name}:{}", i + 1),
                },
            );
            if !verify_witness(&mut w) {
                return Err(Error::Verification(format!(
                    "{name} line {} is not a ({p},{q})-graph",
                    i + 1
                )));
            }
            out.push(w);
        }
        for w in &out {
            self.store(w)?;
        }
        Ok(out)
    }
}

fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("tmp");
    std::fs::write(&tmp, contents)?;
    std::fs::rename(tmp, path)?;
    Ok(())
}

/// `(p,3)`-witness of order `n` from the catalog under `root`. Targets ruled
/// out by the Ramsey table return `None` without touching the disk.
pub fn catalog_lookup(root: impl AsRef<Path>, p: usize, n: usize) -> Result<Option<RamseyWitness>> {
    if check_target(n, p, 3).is_err() {
        return Ok(None);
    }
    Catalog::open(root)?.lookup(p, 3, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn round_trip_and_tamper() {
        let dir = tempfile::tempdir().unwrap();
        let cat = Catalog::open(dir.path()).unwrap();
        let w = RamseyWitness::new(
            Graph::cycle(5).unwrap(),
            3,
            3,
            Provenance::Constructed { name: "C5".into() },
        );
        let path = cat.store(&w).unwrap();
        let back = catalog_lookup(dir.path(), 3, 5).unwrap().unwrap();
        assert_eq!(to_graph6(&back.graph), "Dhc");
        assert!(back.verified);
        assert!(catalog_lookup(dir.path(), 3, 6).unwrap().is_none());
        std::fs::write(&path, "D~{\n").unwrap();
        assert!(matches!(cat.lookup(3, 3, 5), Err(Error::Verification(_))));
    }

    #[test]
    fn ingest_rejects_non_witnesses() {
        let dir = tempfile::tempdir().unwrap();
        let cat = Catalog::open(dir.path()).unwrap();
        let src = dir.path().join("in.g6");
        std::fs::write(&src, "Dhc\nC~\n").unwrap();
        assert!(matches!(
            cat.ingest(&src, 3, 3),
            Err(Error::Verification(_))
        ));
        assert!(cat.lookup(3, 3, 5).unwrap().is_none());
        std::fs::write(&src, "Dhc\n").unwrap();
        assert_eq!(cat.ingest(&src, 3, 3).unwrap().len(), 1);
        assert!(cat.lookup(3, 3, 5).unwrap().is_some());
    }
}
