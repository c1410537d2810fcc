def sign_label(n):
    return "negative" if n < 0 else ("zero" if n == 0 else "positive")
