/* -- mpi_f08_cdesc.c -- generated by mpibind, do not edit */

#include "mpiimpl.h"
#include <ISO_Fortran_binding.h>

int MPIR_Send_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, int dest, int tag, MPI_Comm comm);
int MPIR_Send_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, int dest, int tag, MPI_Comm comm)
{
    void *buf = buf_desc->base_addr;
    return PMPI_Send(buf, count, datatype, dest, tag, comm);
}

int MPIR_Send_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, int dest, int tag, MPI_Comm comm);
int MPIR_Send_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, int dest, int tag, MPI_Comm comm)
{
    void *buf = buf_desc->base_addr;
    return PMPI_Send_c(buf, count, datatype, dest, tag, comm);
}

int MPIR_Recv_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Status *status);
int MPIR_Recv_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Status *status)
{
    void *buf = buf_desc->base_addr;
    return PMPI_Recv(buf, count, datatype, source, tag, comm, status);
}

int MPIR_Recv_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Status *status);
int MPIR_Recv_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Status *status)
{
    void *buf = buf_desc->base_addr;
    return PMPI_Recv_c(buf, count, datatype, source, tag, comm, status);
}

int MPIR_Isend_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, int dest, int tag, MPI_Comm comm, MPI_Request *request);
int MPIR_Isend_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, int dest, int tag, MPI_Comm comm, MPI_Request *request)
{
    void *buf = buf_desc->base_addr;
    return PMPI_Isend(buf, count, datatype, dest, tag, comm, request);
}

int MPIR_Isend_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, int dest, int tag, MPI_Comm comm, MPI_Request *request);
int MPIR_Isend_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, int dest, int tag, MPI_Comm comm, MPI_Request *request)
{
    void *buf = buf_desc->base_addr;
    return PMPI_Isend_c(buf, count, datatype, dest, tag, comm, request);
}

int MPIR_Irecv_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Request *request);
int MPIR_Irecv_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Request *request)
{
    void *buf = buf_desc->base_addr;
    return PMPI_Irecv(buf, count, datatype, source, tag, comm, request);
}

int MPIR_Irecv_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Request *request);
int MPIR_Irecv_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, int source, int tag, MPI_Comm comm, MPI_Request *request)
{
    void *buf = buf_desc->base_addr;
    return PMPI_Irecv_c(buf, count, datatype, source, tag, comm, request);
}

int MPIR_Bcast_cdesc(CFI_cdesc_t *buffer_desc, int count, MPI_Datatype datatype, int root, MPI_Comm comm);
int MPIR_Bcast_cdesc(CFI_cdesc_t *buffer_desc, int count, MPI_Datatype datatype, int root, MPI_Comm comm)
{
    void *buffer = buffer_desc->base_addr;
    return PMPI_Bcast(buffer, count, datatype, root, comm);
}

int MPIR_Bcast_c_cdesc(CFI_cdesc_t *buffer_desc, MPI_Count count, MPI_Datatype datatype, int root, MPI_Comm comm);
int MPIR_Bcast_c_cdesc(CFI_cdesc_t *buffer_desc, MPI_Count count, MPI_Datatype datatype, int root, MPI_Comm comm)
{
    void *buffer = buffer_desc->base_addr;
    return PMPI_Bcast_c(buffer, count, datatype, root, comm);
}

int MPIR_Reduce_cdesc(CFI_cdesc_t *sendbuf_desc, CFI_cdesc_t *recvbuf_desc, int count, MPI_Datatype datatype, MPI_Op op, int root, MPI_Comm comm);
int MPIR_Reduce_cdesc(CFI_cdesc_t *sendbuf_desc, CFI_cdesc_t *recvbuf_desc, int count, MPI_Datatype datatype, MPI_Op op, int root, MPI_Comm comm)
{
    void *sendbuf = sendbuf_desc->base_addr;
    void *recvbuf = recvbuf_desc->base_addr;
    return PMPI_Reduce(sendbuf, recvbuf, count, datatype, op, root, comm);
}

int MPIR_Reduce_c_cdesc(CFI_cdesc_t *sendbuf_desc, CFI_cdesc_t *recvbuf_desc, MPI_Count count, MPI_Datatype datatype, MPI_Op op, int root, MPI_Comm comm);
int MPIR_Reduce_c_cdesc(CFI_cdesc_t *sendbuf_desc, CFI_cdesc_t *recvbuf_desc, MPI_Count count, MPI_Datatype datatype, MPI_Op op, int root, MPI_Comm comm)
{
    void *sendbuf = sendbuf_desc->base_addr;
    void *recvbuf = recvbuf_desc->base_addr;
    return PMPI_Reduce_c(sendbuf, recvbuf, count, datatype, op, root, comm);
}

int MPIR_Allreduce_cdesc(CFI_cdesc_t *sendbuf_desc, CFI_cdesc_t *recvbuf_desc, int count, MPI_Datatype datatype, MPI_Op op, MPI_Comm comm);
int MPIR_Allreduce_cdesc(CFI_cdesc_t *sendbuf_desc, CFI_cdesc_t *recvbuf_desc, int count, MPI_Datatype datatype, MPI_Op op, MPI_Comm comm)
{
    void *sendbuf = sendbuf_desc->base_addr;
    void *recvbuf = recvbuf_desc->base_addr;
    return PMPI_Allreduce(sendbuf, recvbuf, count, datatype, op, comm);
}

int MPIR_Allreduce_c_cdesc(CFI_cdesc_t *sendbuf_desc, CFI_cdesc_t *recvbuf_desc, MPI_Count count, MPI_Datatype datatype, MPI_Op op, MPI_Comm comm);
int MPIR_Allreduce_c_cdesc(CFI_cdesc_t *sendbuf_desc, CFI_cdesc_t *recvbuf_desc, MPI_Count count, MPI_Datatype datatype, MPI_Op op, MPI_Comm comm)
{
    void *sendbuf = sendbuf_desc->base_addr;
    void *recvbuf = recvbuf_desc->base_addr;
    return PMPI_Allreduce_c(sendbuf, recvbuf, count, datatype, op, comm);
}

int MPIR_Fake_new_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, MPI_Comm comm);
int MPIR_Fake_new_cdesc(CFI_cdesc_t *buf_desc, int count, MPI_Datatype datatype, MPI_Comm comm)
{
    void *buf = buf_desc->base_addr;
    return PMPIX_Fake_new(buf, count, datatype, comm);
}

int MPIR_Fake_new_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, MPI_Comm comm);
int MPIR_Fake_new_c_cdesc(CFI_cdesc_t *buf_desc, MPI_Count count, MPI_Datatype datatype, MPI_Comm comm)
{
    void *buf = buf_desc->base_addr;
    return PMPIX_Fake_new_c(buf, count, datatype, comm);
}
