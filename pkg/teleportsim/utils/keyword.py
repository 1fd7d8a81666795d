import dataclasses


@dataclasses.dataclass(frozen=True, unsafe_hash=True)
class Keyword:
    """A named scenario keyword standing in for a generated measurement family."""
    name: str

    @classmethod
    def from_string(cls, s):
        name = s.strip().lower()
        if name not in KNOWN_KEYWORDS:
            raise ValueError(s)
        return cls(name)

    def __eq__(self, other):
        return (
            type(other) == type(self) and
            self.name == other.name
        )

    def __repr__(self):
        return f'Keyword("{self.name}")'


KNOWN_KEYWORDS = ('bell', 'weyl')

BELL = Keyword('bell')
WEYL = Keyword('weyl')
