"""Indexed variable spaces for the multiview and universal multiview rings.

A ``VarSpace`` assigns a dense integer index to every variable of a ring:

* multiview ring: image variables ``x_i_j`` (camera i, plane coordinate j),
  grouped per camera, ``N = 3n`` variables;
* universal ring: image variables plus camera-entry variables ``a_i_j_k``
  (camera i, row j, column k), grouped per camera with the three image
  variables first, ``N = 15n`` variables;
* generic rings for ad-hoc polynomials.

A space can be *doubled*: every affine variable ``v`` gains a homogenizing
partner at index ``v + N``, used when polynomials are embedded in a product
of projective lines.
"""

from __future__ import annotations

from dataclasses import dataclass, field

IMAGE = "x"
CAMERA = "a"
PARTNER = "h"
PLAIN = "t"


@dataclass(frozen=True)
class VarSpace:
    kinds: tuple
    names: tuple
    n: int = 0
    affine_count: int = 0
    doubled: bool = False
    # maps var index -> payload: (i, j) for image, (i, j, k) for camera entries
    payload: tuple = field(default=(), repr=False)

    @property
    def nvars(self) -> int:
        return len(self.kinds)

    @classmethod
    def multiview(cls, n: int) -> "VarSpace":
        kinds, names, payload = [], [], []
        for i in range(1, n + 1):
            for j in range(1, 4):
                kinds.append(IMAGE)
                names.append(f"x_{i}_{j}")
                payload.append((i, j))
        return cls(tuple(kinds), tuple(names), n, 3 * n, False, tuple(payload))

    @classmethod
    def universal(cls, n: int) -> "VarSpace":
        kinds, names, payload = [], [], []
        for i in range(1, n + 1):
            for j in range(1, 4):
                kinds.append(IMAGE)
                names.append(f"x_{i}_{j}")
                payload.append((i, j))
            for j in range(1, 4):
                for k in range(1, 5):
                    kinds.append(CAMERA)
                    names.append(f"a_{i}_{j}_{k}")
                    payload.append((i, j, k))
        return cls(tuple(kinds), tuple(names), n, 15 * n, False, tuple(payload))

    @classmethod
    def generic(cls, names) -> "VarSpace":
        names = tuple(names)
        return cls((PLAIN,) * len(names), names, 0, len(names), False,
                   tuple((None,) for _ in names))

    def double(self) -> "VarSpace":
        """Adjoin a homogenizing partner variable for every affine variable."""
        if self.doubled:
            raise ValueError("space is already doubled")
        kinds = self.kinds + (PARTNER,) * self.affine_count
        names = self.names + tuple(f"{nm}_h" for nm in self.names)
        payload = self.payload + self.payload
        return VarSpace(kinds, names, self.n, self.affine_count, True, payload)

    def affine(self) -> "VarSpace":
        """The affine space a doubled space was built from."""
        if not self.doubled:
            return self
        N = self.affine_count
        return VarSpace(self.kinds[:N], self.names[:N], self.n, N, False,
                        self.payload[:N])

    def is_affine(self, v: int) -> bool:
        return v < self.affine_count

    def partner(self, v: int) -> int:
        if not self.doubled or v >= self.affine_count:
            raise ValueError(f"variable {v} has no partner")
        return v + self.affine_count

    def kind(self, v: int) -> str:
        return self.kinds[v]

    def camera_of(self, v: int) -> int:
        """1-based camera index of an image or camera-entry variable."""
        if self.kinds[v] not in (IMAGE, CAMERA):
            raise ValueError(f"variable {self.names[v]} has no camera")
        return self.payload[v][0]

    def x_index(self, i: int, j: int) -> int:
        """Index of image variable x_i_j (1-based i, j)."""
        if self.kinds[0] != IMAGE:
            raise ValueError("not a camera variable space")
        block = 15 if CAMERA in self.kinds else 3
        return block * (i - 1) + (j - 1)

    def a_index(self, i: int, j: int, k: int) -> int:
        """Index of camera-entry variable a_i_j_k (1-based)."""
        if CAMERA not in self.kinds:
            raise ValueError("space has no camera-entry variables")
        return 15 * (i - 1) + 3 + 4 * (j - 1) + (k - 1)

    def image_coords(self, v: int):
        """(camera, plane coordinate) of an image variable."""
        if self.kinds[v] != IMAGE:
            raise ValueError(f"{self.names[v]} is not an image variable")
        return self.payload[v]

    def camera_entry(self, v: int):
        """(camera, row, column) of a camera-entry variable."""
        if self.kinds[v] != CAMERA:
            raise ValueError(f"{self.names[v]} is not a camera-entry variable")
        return self.payload[v]

    def name(self, v: int) -> str:
        return self.names[v]

    def index_of(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def image_vars(self):
        return [v for v in range(self.nvars) if self.kinds[v] == IMAGE]

    def camera_vars(self):
        return [v for v in range(self.nvars) if self.kinds[v] == CAMERA]

    def camera_block(self, i: int):
        """All variables belonging to camera i (image + entries if present)."""
        return [v for v in range(self.affine_count)
                if self.kinds[v] in (IMAGE, CAMERA) and self.payload[v][0] == i]
