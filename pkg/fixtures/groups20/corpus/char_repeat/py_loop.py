def char_repeat(n: int) -> str:
    k = min(max(n, 0), 10)
    text = ""
    for _ in range(k):
        text += "ab"
    return text
