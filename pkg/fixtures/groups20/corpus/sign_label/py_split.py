def sign_of(k):
    if k < 0:
        return -1
    if k == 0:
        return 0
    return 1


def sign_label(n):
    s = sign_of(n)
    if s < 0:
        return "negative"
    if s == 0:
        return "zero"
    return "positive"
