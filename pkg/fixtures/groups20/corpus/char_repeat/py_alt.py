def char_repeat(n):
    return "ab" * min(max(n, 0), 10)
