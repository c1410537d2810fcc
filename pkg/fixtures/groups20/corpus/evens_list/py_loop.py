def evens_list(n: int) -> list:
    found = []
    for i in range(n):
        if i % 2 == 0:
            found.append(i)
    return found
