# keeps the tests directory importable (shared oracle helpers)
