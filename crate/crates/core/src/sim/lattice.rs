use super::SimError;

/// Integer coordinates in `Z^d`.
pub type Point = Vec<i64>;

/// `|a - b|_1`, the graph distance in `Z^d` and in any box holding both.
pub fn l1_distance(a: &[i64], b: &[i64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| x.abs_diff(*y)).sum()
}

/// `⟨ab⟩ = dist(a, b) + 1`.
pub fn bracket(a: &[i64], b: &[i64]) -> u64 {
    l1_distance(a, b) + 1
}

/// Index `n` of the dyadic shell `2^n <= ⟨ab⟩ < 2^(n+1)` holding `b`
/// around `a`.
pub fn dyadic_shell(a: &[i64], b: &[i64]) -> u32 {
    bracket(a, b).ilog2()
}

/// The box `{0..L-1}^d` plus one wired vertex. Sites are numbered with the
/// first coordinate varying fastest; the wired vertex is numbered last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBox {
    d: usize,
    side: usize,
    strides: Vec<usize>,
    sites: usize,
}

impl LatticeBox {
    pub fn new(d: usize, side: usize) -> Result<Self, SimError> {
        if d == 0 {
            return Err(SimError::BadParameter("dimension must be at least 1".into()));
        }
        if side < 2 {
            return Err(SimError::BadParameter("side must be at least 2".into()));
        }
        let mut strides = Vec::with_capacity(d);
        let mut s: usize = 1;
        for _ in 0..d {
            strides.push(s);
            s = s
                .checked_mul(side)
                .ok_or_else(|| SimError::BadParameter("box too large".into()))?;
        }
        if s >= u32::MAX as usize {
            return Err(SimError::BadParameter("box too large".into()));
        }
        Ok(LatticeBox {
            d,
            side,
            strides,
            sites: s,
        })
    }

    pub fn dimension(&self) -> usize {
        self.d
    }

    pub fn side(&self) -> usize {
        self.side
    }

    /// `L^d`.
    pub fn site_count(&self) -> usize {
        self.sites
    }

    /// `L^d + 1`.
    pub fn vertex_count(&self) -> usize {
        self.sites + 1
    }

    pub fn wired(&self) -> usize {
        self.sites
    }

    pub fn is_wired(&self, v: usize) -> bool {
        v == self.sites
    }

    /// Steps per site: `2d`. Direction `2a` lowers coordinate `a`, `2a + 1`
    /// raises it.
    pub fn degree(&self) -> usize {
        2 * self.d
    }

    pub fn coords(&self, v: usize) -> Point {
        assert!(v < self.sites, "the wired vertex has no coordinates");
        (0..self.d)
            .map(|a| ((v / self.strides[a]) % self.side) as i64)
            .collect()
    }

    pub fn index(&self, p: &[i64]) -> Option<usize> {
        if p.len() != self.d {
            return None;
        }
        let mut v = 0;
        for (a, &x) in p.iter().enumerate() {
            if x < 0 || x >= self.side as i64 {
                return None;
            }
            v += x as usize * self.strides[a];
        }
        Some(v)
    }

    pub fn index_or_err(&self, p: &[i64]) -> Result<usize, SimError> {
        self.index(p).ok_or_else(|| SimError::PointOutside(p.to_vec()))
    }

    /// Neighbour of site `v` in direction `dir`; the wired vertex when the
    /// step leaves the box.
    #[inline]
    pub fn neighbor(&self, v: usize, dir: usize) -> usize {
        let a = dir >> 1;
        let x = (v / self.strides[a]) % self.side;
        if dir & 1 == 0 {
            if x == 0 {
                self.sites
            } else {
                v - self.strides[a]
            }
        } else if x + 1 == self.side {
            self.sites
        } else {
            v + self.strides[a]
        }
    }

    /// Box sites adjacent to `v` inside the box.
    pub fn site_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.degree())
            .map(move |dir| self.neighbor(v, dir))
            .filter(|&u| u != self.sites)
    }

    pub fn distance(&self, a: usize, b: usize) -> u64 {
        l1_distance(&self.coords(a), &self.coords(b))
    }

    /// Offsets with `|x|_1 <= r`.
    pub fn ball_offsets(&self, r: usize) -> Vec<Point> {
        fn rec(axis: usize, d: usize, left: i64, cur: &mut Point, out: &mut Vec<Point>) {
            if axis == d {
                out.push(cur.clone());
                return;
            }
            for x in -left..=left {
                cur.push(x);
                rec(axis + 1, d, left - x.abs(), cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(0, self.d, r as i64, &mut Vec::with_capacity(self.d), &mut out);
        out
    }

    /// Sites within distance `r` of `v`, given offsets from
    /// [`ball_offsets`](Self::ball_offsets).
    pub fn ball_with(&self, v: usize, offsets: &[Point]) -> Vec<usize> {
        let c = self.coords(v);
        offsets
            .iter()
            .filter_map(|o| {
                let p: Point = c.iter().zip(o).map(|(x, y)| x + y).collect();
                self.index(&p)
            })
            .collect()
    }

    pub fn ball(&self, v: usize, r: usize) -> Vec<usize> {
        self.ball_with(v, &self.ball_offsets(r))
    }

    /// The site nearest the middle of the box.
    pub fn center(&self) -> Point {
        vec![(self.side / 2) as i64; self.d]
    }

    /// Comma-joined coordinates, or `W` for the wired vertex.
    pub fn label(&self, v: usize) -> String {
        if self.is_wired(v) {
            "W".into()
        } else {
            self.coords(v)
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse_label(&self, s: &str) -> Option<usize> {
        if s == "W" {
            return Some(self.sites);
        }
        let p: Option<Point> = s.split(',').map(|x| x.trim().parse().ok()).collect();
        self.index(&p?)
    }
}
