def even_nums(max_val):
    return [num for num in xrange(max_val) if num % 2 == 0]
