def reverse_digits(n):
    text = str(abs(n))[::-1]
    rev = int(text)
    return -rev if n < 0 else rev
