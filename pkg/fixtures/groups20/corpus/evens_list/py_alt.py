def evens_list(n):
    return [i for i in range(n) if i % 2 == 0]
