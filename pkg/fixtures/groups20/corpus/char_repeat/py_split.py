def clamp_count(k):
    if k < 0:
        return 0
    if k > 10:
        return 10
    return k


def char_repeat(n):
    return "ab" * clamp_count(n)
