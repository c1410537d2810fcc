def squares_list(n: int) -> list:
    values = []
    for i in range(n):
        values.append(i * i)
    return values
